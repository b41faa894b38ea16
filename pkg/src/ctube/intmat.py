"""Small exact integer matrices (Python ints, so arbitrary precision)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InternalInvariantBroken


class IntMatrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None) -> None:
        self.rows = tuple(tuple(int(v) for v in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)], ncols=c)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "IntMatrix":
        if not cols:
            return cls([])
        return cls(zip(*cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows), ncols=self.nrows) if self.rows else IntMatrix([])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
            ncols=other.ncols,
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-v for v in r] for r in self.rows], ncols=self.ncols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self.rows == other.rows and self.shape == other.shape

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def submatrix(self, rows: slice, cols: slice = slice(None)) -> "IntMatrix":
        return IntMatrix([r[cols] for r in self.rows[rows]])

    def permute_columns(self, perm: Sequence[int]) -> "IntMatrix":
        return IntMatrix([[r[j] for j in perm] for r in self.rows], ncols=len(perm))

    def is_skew_symmetric(self) -> bool:
        n = self.nrows
        return self.ncols == n and all(
            self.rows[i][j] == -self.rows[j][i] for i in range(n) for j in range(n)
        )

    def det(self) -> int:
        """Bareiss fraction-free elimination."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse(self) -> "IntMatrix":
        """Inverse over the integers; the determinant must be +-1."""
        n = self.nrows
        d = self.det()
        if d not in (1, -1):
            raise InternalInvariantBroken(f"matrix is not unimodular (det {d})")
        aug = [[Fraction(v) for v in r] + [Fraction(int(i == j)) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for c in range(n):
            piv = next(i for i in range(c, n) if aug[i][c] != 0)
            aug[c], aug[piv] = aug[piv], aug[c]
            pv = aug[c][c]
            aug[c] = [v / pv for v in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
        out = []
        for r in aug:
            row = r[n:]
            if any(v.denominator != 1 for v in row):
                raise InternalInvariantBroken("non-integral inverse of a unimodular matrix")
            out.append([int(v) for v in row])
        return IntMatrix(out)
