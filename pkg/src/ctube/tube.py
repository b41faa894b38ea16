"""Indecomposable objects of the tube of rank p and of its cluster category.

An indecomposable ``(a, b)`` is the uniserial nilpotent representation with
socle at vertex ``a`` and length ``b``; its composition factors, read from
the socle upward, sit at vertices ``a, a+1, ..., a+b-1`` (mod p).  Objects of
the cluster tube are identified with objects of the tube, with ``Sigma = tau``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InvalidLength, InvalidRank, RankMismatch, WingUndefined

__all__ = [
    "Indec",
    "TubeObject",
    "ZERO",
    "normalize",
    "tau",
    "tau_inv",
    "shift",
    "shift_inv",
    "indec_or_zero",
    "hom_tube_dim",
    "hom_cluster_dim",
    "ext1_dim",
    "hom_dim_obj",
    "in_wing",
    "is_rigid_indec",
]


@dataclass(frozen=True, order=True)
class Indec:
    """Indecomposable ``(a, b)`` in the tube of rank ``p``; ``a`` is kept in 1..p."""

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise InvalidRank(f"tube rank must be >= 2, got {self.p}")
        if self.b < 1:
            raise InvalidLength(f"length must be >= 1, got {self.b}")
        object.__setattr__(self, "a", (self.a - 1) % self.p + 1)

    @property
    def n(self) -> int:
        return self.p - 1

    def __str__(self) -> str:
        return f"({self.a},{self.b})"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}

    @classmethod
    def from_json(cls, data: dict, p: int) -> "Indec":
        return cls(int(data["a"]), int(data["b"]), p)


def normalize(a: int, b: int, p: int) -> Indec:
    return Indec(a, b, p)


def tau(x: Indec) -> Indec:
    return Indec(x.a - 1, x.b, x.p)


def tau_inv(x: Indec) -> Indec:
    return Indec(x.a + 1, x.b, x.p)


# Sigma coincides with tau in the cluster tube.
shift = tau
shift_inv = tau_inv


class TubeObject:
    """Finite direct sum of indecomposables; the empty sum is the zero object."""

    __slots__ = ("_summands",)

    def __init__(self, summands: Iterable[Indec] = ()) -> None:
        self._summands = tuple(sorted(summands))

    @property
    def summands(self) -> tuple[Indec, ...]:
        return self._summands

    def is_zero(self) -> bool:
        return not self._summands

    def multiplicity(self, x: Indec) -> int:
        return self._summands.count(x)

    def counts(self) -> Counter:
        return Counter(self._summands)

    def __add__(self, other: "TubeObject") -> "TubeObject":
        return TubeObject(self._summands + other._summands)

    def __iter__(self) -> Iterator[Indec]:
        return iter(self._summands)

    def __len__(self) -> int:
        return len(self._summands)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TubeObject) and self._summands == other._summands

    def __hash__(self) -> int:
        return hash(self._summands)

    def __repr__(self) -> str:
        if not self._summands:
            return "TubeObject(0)"
        return "TubeObject(" + " + ".join(map(str, self._summands)) + ")"

    def to_json(self) -> list:
        return [x.to_json() for x in self._summands]


ZERO = TubeObject()


def indec_or_zero(a: int, b: int, p: int) -> TubeObject:
    """``(a, b)`` as a one-summand object, or the zero object when ``b == 0``."""
    if b == 0:
        return ZERO
    return TubeObject([Indec(a, b, p)])


def _check_rank(x: Indec, y: Indec) -> None:
    if x.p != y.p:
        raise RankMismatch(f"objects live in tubes of rank {x.p} and {y.p}")


def hom_tube_dim(x: Indec, y: Indec) -> int:
    """dim Hom_T(x, y).

    A map kills a submodule of ``x`` of length ``k`` and embeds the quotient
    ``(x.a + k, x.b - k)`` as the submodule of ``y`` of the same length, so
    each admissible ``k`` contributes one dimension.
    """
    _check_rank(x, y)
    p = x.p
    return sum(
        1
        for k in range(x.b)
        if (x.a + k - y.a) % p == 0 and x.b - k <= y.b
    )


def hom_cluster_dim(x: Indec, y: Indec) -> int:
    """dim Hom_C(x, y) = dim Hom_T(x, y) + dim Hom_T(y, tau^2 x)."""
    _check_rank(x, y)
    return hom_tube_dim(x, y) + hom_tube_dim(y, tau(tau(x)))


def ext1_dim(x: Indec, y: Indec) -> int:
    _check_rank(x, y)
    return hom_cluster_dim(x, shift(y))


def hom_dim_obj(x: TubeObject | Indec, y: TubeObject | Indec) -> int:
    """Additive extension of :func:`hom_cluster_dim` to direct sums."""
    xs = x.summands if isinstance(x, TubeObject) else (x,)
    ys = y.summands if isinstance(y, TubeObject) else (y,)
    return sum(hom_cluster_dim(u, v) for u in xs for v in ys)


def in_wing(m: Indec, top: Indec) -> bool:
    """Whether ``m`` lies in the triangle of the AR-quiver with ``top`` at its apex."""
    _check_rank(m, top)
    if top.b >= top.p:
        raise WingUndefined(f"wing of {top} is undefined: length must be < {top.p}")
    j = (m.a - top.a) % top.p
    return j <= top.b - 1 and 1 <= m.b <= top.b - j


def is_rigid_indec(x: Indec) -> bool:
    return x.b <= x.p - 1
