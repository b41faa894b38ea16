"""Brute-force Hom dimensions from explicit nilpotent representations.

Each indecomposable is realised as a representation of the cyclic quiver
with arrows ``v -> v-1`` and Hom spaces are computed by solving the
intertwiner equations over the rationals.  Nothing here consults the
closed-form counts in :mod:`ctube.tube`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RankMismatch
from .tube import Indec

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class NilpotentRep:
    """Representation with ``dims[v-1]`` at vertex ``v``.

    ``maps[v-1]`` is the matrix of the arrow leaving vertex ``v`` (towards
    ``v-1``), of shape ``dims[target] x dims[v]``.
    """

    p: int
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]

    def target(self, v: int) -> int:
        return (v - 2) % self.p + 1

    def cycle_composite(self, start: int = 1) -> Matrix:
        """Composite of all p arrows starting and ending at ``start``."""
        d = self.dims[start - 1]
        acc = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        v = start
        for _ in range(self.p):
            acc = _matmul(self.maps[v - 1], acc)
            v = self.target(v)
        return acc


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        rows = len(a)
        cols = len(b[0]) if b else 0
        return [[Fraction(0)] * cols for _ in range(rows)]
    inner = len(b)
    return [
        [sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def basis_positions(x: Indec) -> list[tuple[int, int]]:
    """(vertex, local index) of the basis vectors e_1..e_b of ``x``."""
    seen = [0] * x.p
    out = []
    for j in range(x.b):
        v = (x.a + j - 1) % x.p + 1
        out.append((v, seen[v - 1]))
        seen[v - 1] += 1
    return out


def build_rep(x: Indec) -> NilpotentRep:
    p = x.p
    pos = basis_positions(x)
    dims = [0] * p
    for v, _ in pos:
        dims[v - 1] += 1
    maps: list[Matrix] = []
    for v in range(1, p + 1):
        tgt = (v - 2) % p + 1
        maps.append([[Fraction(0)] * dims[v - 1] for _ in range(dims[tgt - 1])])
    # e_j (j >= 2) goes to e_{j-1}; the socle e_1 goes to zero
    for j in range(1, x.b):
        v, i = pos[j]
        w, r = pos[j - 1]
        maps[v - 1][r][i] = Fraction(1)
    return NilpotentRep(p, tuple(dims), tuple(maps))


def rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a sparse matrix given as a list of {column: value} rows."""
    pivots: dict[int, dict[int, Fraction]] = {}
    r = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = pivots.get(col)
            if piv is None:
                pivots[col] = row
                r += 1
                break
            factor = row[col] / piv[col]
            for c, v in piv.items():
                nv = row.get(c, Fraction(0)) - factor * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return r


def hom_dim_oracle(x: Indec, y: Indec) -> int:
    if x.p != y.p:
        raise RankMismatch(f"objects live in tubes of rank {x.p} and {y.p}")
    rx, ry = build_rep(x), build_rep(y)
    p = x.p
    # unknown H_v[r][c] : dims_x[v] -> dims_y[v]
    offset = []
    nvars = 0
    for v in range(p):
        offset.append(nvars)
        nvars += rx.dims[v] * ry.dims[v]

    def var(v: int, r: int, c: int) -> int:
        return offset[v - 1] + r * rx.dims[v - 1] + c

    rows: list[dict[int, Fraction]] = []
    for v in range(1, p + 1):
        w = rx.target(v)
        ax, ay = rx.maps[v - 1], ry.maps[v - 1]
        # ay . H_v - H_w . ax = 0, an equation per entry of a dims_y[w] x dims_x[v] matrix
        for r in range(ry.dims[w - 1]):
            for c in range(rx.dims[v - 1]):
                eq: dict[int, Fraction] = {}
                for s in range(ry.dims[v - 1]):
                    if ay[r][s]:
                        k = var(v, s, c)
                        eq[k] = eq.get(k, Fraction(0)) + ay[r][s]
                for s in range(rx.dims[w - 1]):
                    if ax[s][c]:
                        k = var(w, r, s)
                        eq[k] = eq.get(k, Fraction(0)) - ax[s][c]
                if eq:
                    rows.append(eq)
    return nvars - rank(rows)
