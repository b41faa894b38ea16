"""Explicit morphism bases and composition in the cluster tube.

This is an independent route to the exchange data: instead of reading
middle terms off closed formulas, minimal add(T)-approximations and Gabriel
quivers are computed from the radical filtration of the category spanned by
a finite set of indecomposables.

Basis of Hom_C(X, Y):

* ``("T", k)`` -- the tube map killing the length-``k`` submodule of ``X``
  and embedding the quotient ``(X.a+k, X.b-k)`` into ``Y``;
* ``("D", s)`` -- the functional dual to the tube map ``("T", s)`` in
  Hom_T(Y, tau^2 X), via Hom_D(X, tau^-1 Sigma Y) = D Hom_T(Y, tau^2 X).

Composites of basis elements are again basis elements (or zero), so every
subspace below is spanned by a subset of the basis and dimensions reduce to
counting.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

from .tube import Indec, TubeObject, tau

Basis = tuple[str, int]


def tube_basis(x: Indec, y: Indec) -> list[int]:
    p = x.p
    return [k for k in range(x.b) if (x.a + k - y.a) % p == 0 and x.b - k <= y.b]


def hom_basis(x: Indec, y: Indec) -> list[Basis]:
    t2x = tau(tau(x))
    return [("T", k) for k in tube_basis(x, y)] + [("D", s) for s in tube_basis(y, t2x)]


def compose(x: Indec, y: Indec, z: Indec, f: Basis, g: Basis) -> Basis | None:
    """The composite ``g . f`` of ``f: x -> y`` and ``g: y -> z``."""
    kf, i = f
    kg, j = g
    if kf == "T" and kg == "T":
        k = i + j
        return ("T", k) if k in tube_basis(x, z) else None
    if kf == "D" and kg == "D":
        return None
    if kf == "T":
        # g = dual of phi_j in Hom_T(z, tau^2 y); precompose with tau^2 f = phi_i
        s = j - i
    else:
        # f = dual of phi_i in Hom_T(y, tau^2 x); postcompose with g = phi_j
        s = i - j
    if s >= 0 and s in tube_basis(z, tau(tau(x))):
        return ("D", s)
    return None


def _radical_basis(x: Indec, y: Indec) -> list[Basis]:
    basis = hom_basis(x, y)
    if x == y:
        basis = [b for b in basis if b != ("T", 0)]
    return basis


def factoring_span(x: Indec, y: Indec, through: Sequence[Indec], radical: bool) -> set[Basis]:
    """Basis elements of Hom(x, y) that are composites x -> w -> y, w in ``through``.

    With ``radical`` set, both legs are restricted to radical maps.
    """
    first = _radical_basis if radical else hom_basis
    hit: set[Basis] = set()
    for w in through:
        for f in first(x, w):
            for g in first(w, y):
                c = compose(x, w, y, f, g)
                if c is not None:
                    hit.add(c)
    return hit


def minimal_right_approximation(x: Indec, tbar: Sequence[Indec]) -> TubeObject:
    """Source of the minimal right add(tbar)-approximation of ``x`` (``x`` not in tbar)."""
    out: list[Indec] = []
    for t in tbar:
        top = set(hom_basis(t, x))
        for w in tbar:
            for r in _radical_basis(t, w):
                for g in hom_basis(w, x):
                    c = compose(t, w, x, r, g)
                    if c is not None:
                        top.discard(c)
        out.extend([t] * len(top))
    return TubeObject(out)


def gabriel_quiver(summands: Sequence[Indec]) -> dict[tuple[int, int], int]:
    """Arrow counts ``(i, j) -> dim rad(T_i, T_j) / rad^2(T_i, T_j)``, 1-based."""
    arrows: dict[tuple[int, int], int] = {}
    for i, ti in enumerate(summands, 1):
        for j, tj in enumerate(summands, 1):
            rad = set(_radical_basis(ti, tj))
            rad2 = factoring_span(ti, tj, summands, radical=True)
            count = len(rad - rad2)
            if count:
                arrows[(i, j)] = count
    return arrows


def quotient_hom_dim(x: Indec, y: Indec, ideal: Iterable[Indec]) -> int:
    """dim Hom_C(x, y) modulo maps factoring through add(ideal)."""
    ideal = list(ideal)
    return len(set(hom_basis(x, y)) - factoring_span(x, y, ideal, radical=False))


def approximation_counts(x: Indec, tbar: Sequence[Indec]) -> Counter:
    return minimal_right_approximation(x, tbar).counts()
