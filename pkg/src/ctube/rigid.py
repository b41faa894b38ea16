"""Rigid and maximal rigid objects of the cluster tube and their mutation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    BadDirection,
    InternalInvariantBroken,
    InvalidRank,
    NotExchangePair,
    NotRigid,
    RankMismatch,
)
from .intmat import IntMatrix
from .tube import (
    ZERO,
    Indec,
    TubeObject,
    ext1_dim,
    hom_dim_obj,
    indec_or_zero,
    is_rigid_indec,
    shift,
)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidRank(f"n must be a positive integer, got {n!r}")


def enum_rigid_indecs(n: int) -> list[Indec]:
    _check_n(n)
    p = n + 1
    return [Indec(a, b, p) for a in range(1, p + 1) for b in range(1, n + 1)]


class RigidTable:
    """Rigid indecomposables at rank ``n`` with Ext-orthogonality bitmasks."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.objects = enum_rigid_indecs(n)
        self.index = {x: i for i, x in enumerate(self.objects)}
        self.compat: list[int] = []
        for x in self.objects:
            mask = 0
            for j, y in enumerate(self.objects):
                if ext1_dim(x, y) == 0 and ext1_dim(y, x) == 0:
                    mask |= 1 << j
            self.compat.append(mask)

    def mask_of(self, xs: Iterable[Indec]) -> int:
        m = 0
        for x in xs:
            m |= 1 << self.index[x]
        return m

    def common_compatible(self, xs: Iterable[Indec]) -> int:
        m = (1 << len(self.objects)) - 1
        for x in xs:
            m &= self.compat[self.index[x]]
        return m

    def members(self, mask: int) -> list[Indec]:
        return [x for i, x in enumerate(self.objects) if mask >> i & 1]


@lru_cache(maxsize=None)
def rigid_table(n: int) -> RigidTable:
    _check_n(n)
    return RigidTable(n)


@dataclass(frozen=True)
class MaximalRigid:
    """Basic maximal rigid object; ``summands[0]`` is the length-``n`` summand."""

    n: int
    summands: tuple[Indec, ...]

    def __init__(self, n: int, summands: Iterable[Indec], validate: bool = True) -> None:
        _check_n(n)
        xs = list(summands)
        p = n + 1
        for x in xs:
            if x.p != p:
                raise RankMismatch(f"{x} lives in rank {x.p}, expected {p}")
        top = [x for x in xs if x.b == n]
        if len(top) == 1:
            xs = top + [x for x in xs if x.b != n]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "summands", tuple(xs))
        if validate:
            self.validate()

    def validate(self) -> None:
        xs, n = self.summands, self.n
        if len(xs) != n or len(set(xs)) != n:
            raise NotRigid(f"need {n} distinct summands, got {list(map(str, xs))}")
        for x in xs:
            if not is_rigid_indec(x):
                raise NotRigid(f"{x} is not rigid")
        for x in xs:
            for y in xs:
                if ext1_dim(x, y):
                    raise NotRigid(f"Ext^1({x}, {y}) != 0")
        if sum(1 for x in xs if x.b == n) != 1:
            raise NotRigid("a maximal rigid object has exactly one summand of length n")
        table = rigid_table(n)
        if table.common_compatible(xs) & ~table.mask_of(xs):
            raise NotRigid("object is rigid but not maximal")

    @property
    def p(self) -> int:
        return self.n + 1

    @property
    def key(self) -> frozenset:
        return frozenset(self.summands)

    def __getitem__(self, k: int) -> Indec:
        """1-based access, matching the slot labels used for mutation."""
        return self.summands[k - 1]

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __str__(self) -> str:
        return ";".join(map(str, self.summands))

    def shifted(self) -> tuple[Indec, ...]:
        """Summands of Sigma T in slot order."""
        return tuple(shift(x) for x in self.summands)

    def replace(self, k: int, x: Indec) -> "MaximalRigid":
        xs = list(self.summands)
        xs[k - 1] = x
        return MaximalRigid(self.n, xs, validate=False)

    def to_json(self) -> list:
        return [x.to_json() for x in self.summands]

    @classmethod
    def parse(cls, n: int, text: str) -> "MaximalRigid":
        """Parse ``"(a,b);(a,b);..."``."""
        p = n + 1
        out = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            inner = chunk.strip("()").split(",")
            if len(inner) != 2:
                raise ValueError(f"cannot parse {chunk!r} as (a,b)")
            out.append(Indec(int(inner[0]), int(inner[1]), p))
        return cls(n, out)


def parse_indec(n: int, text: str) -> Indec:
    inner = text.strip().strip("()").split(",")
    if len(inner) != 2:
        raise ValueError(f"cannot parse {text!r} as (a,b)")
    return Indec(int(inner[0]), int(inner[1]), n + 1)


def _canonical(n: int, xs: Iterable[Indec]) -> MaximalRigid:
    xs = sorted(xs)
    return MaximalRigid(n, xs, validate=False)


@lru_cache(maxsize=None)
def _maximal_rigid_keys(n: int) -> tuple[tuple[Indec, ...], ...]:
    table = rigid_table(n)
    objs = table.objects
    found: list[tuple[Indec, ...]] = []

    def maximal_ok(chosen: list[int]) -> bool:
        common = table.common_compatible(objs[i] for i in chosen)
        return common & ~table.mask_of(objs[i] for i in chosen) == 0

    def search(chosen: list[int], allowed: int) -> None:
        if len(chosen) == n:
            if maximal_ok(chosen):
                found.append(tuple(objs[i] for i in chosen))
            return
        start = chosen[-1] + 1 if chosen else 0
        for i in range(start, len(objs)):
            if allowed >> i & 1:
                chosen.append(i)
                search(chosen, allowed & table.compat[i])
                chosen.pop()

    search([], (1 << len(objs)) - 1)
    return tuple(found)


def enum_maximal_rigids(n: int) -> list[MaximalRigid]:
    """All basic maximal rigid objects, ordered by their sorted summand lists."""
    _check_n(n)
    return [_canonical(n, xs) for xs in _maximal_rigid_keys(n)]


def standard_maximal_rigid(n: int) -> MaximalRigid:
    """The wing object (1,1) + (1,2) + ... + (1,n)."""
    _check_n(n)
    return MaximalRigid(n, [Indec(1, b, n + 1) for b in range(1, n + 1)])


@dataclass(frozen=True)
class ExchangeData:
    removed: Indec
    replacement: Indec
    U: TubeObject
    U_prime: TubeObject

    def to_json(self) -> dict:
        return {
            "removed": self.removed.to_json(),
            "replacement": self.replacement.to_json(),
            "U": self.U.to_json(),
            "U_prime": self.U_prime.to_json(),
        }


def _pair(*parts: TubeObject) -> TubeObject:
    out = ZERO
    for part in parts:
        out = out + part
    return out


def _oriented_middles(x: Indec, xs: Indec) -> tuple[TubeObject, TubeObject] | None:
    """Middles (U, U') for the orientation in which ``x`` plays the socle-side role."""
    p, n = x.p, x.p - 1
    a, b = x.a, x.b
    h = (xs.a - a) % p or p
    if b == n:
        if xs.b != n or not 1 <= h <= n:
            return None
        u = _pair(indec_or_zero(a, h - 1, p), indec_or_zero(a, h - 1, p))
        up = _pair(indec_or_zero(a + h, n - h, p), indec_or_zero(a + h, n - h, p))
        return u, up
    if xs.b == n or not 1 <= h <= b:
        return None
    i = xs.b - b + h
    if not 1 <= i <= n - b:
        return None
    up = _pair(indec_or_zero(a, b + i, p), indec_or_zero(a + h, b - h, p))
    u = _pair(indec_or_zero(a + b + 1, i - 1, p), indec_or_zero(a, h - 1, p))
    return u, up


def exchange_triangles(x: Indec, x_star: Indec) -> tuple[TubeObject, TubeObject]:
    """Middle terms ``(U, U')`` of ``x* -> U -> x`` and ``x -> U' -> x*``."""
    if x.p != x_star.p:
        raise RankMismatch(f"objects live in tubes of rank {x.p} and {x_star.p}")
    if x == x_star or not (is_rigid_indec(x) and is_rigid_indec(x_star)):
        raise NotExchangePair(f"({x}, {x_star}) is not an exchange pair")
    fwd = _oriented_middles(x, x_star)
    back = _oriented_middles(x_star, x)
    if back is not None:
        back = (back[1], back[0])
    if fwd is None and back is None:
        raise NotExchangePair(f"({x}, {x_star}) is not an exchange pair")
    if fwd is not None and back is not None and fwd != back:
        raise InternalInvariantBroken(f"ambiguous exchange triangles for ({x}, {x_star})")
    return fwd if fwd is not None else back


def mutate_rigid(t: MaximalRigid, k: int) -> tuple[MaximalRigid, ExchangeData]:
    if not 1 <= k <= t.n:
        raise BadDirection(f"direction {k} outside 1..{t.n}")
    table = rigid_table(t.n)
    x = t[k]
    tbar = [y for j, y in enumerate(t.summands, 1) if j != k]
    cands = table.members(table.common_compatible(tbar) & ~table.mask_of(tbar))
    if len(cands) != 2 or x not in cands:
        raise InternalInvariantBroken(
            f"almost complete {tbar} has completions {list(map(str, cands))}"
        )
    x_star = cands[0] if cands[1] == x else cands[1]
    u, up = exchange_triangles(x, x_star)
    for part in (u, up):
        for y in part:
            if y not in tbar:
                raise InternalInvariantBroken(f"middle term {y} outside add(T minus {x})")
    return t.replace(k, x_star), ExchangeData(x, x_star, u, up)


def b_matrix(t: MaximalRigid) -> IntMatrix:
    n = t.n
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n + 1):
        _, ex = mutate_rigid(t, j)
        for i in range(1, n + 1):
            ti = t[i]
            rows[i - 1][j - 1] = ex.U.multiplicity(ti) - ex.U_prime.multiplicity(ti)
    return IntMatrix(rows)


def skew_symmetrizer(n: int) -> IntMatrix:
    return IntMatrix.diag([2] + [1] * (n - 1))


def quiver_arrows(t: MaximalRigid) -> dict[tuple[int, int], int]:
    """Arrow counts of the quiver of End(T), read back from B_T.

    Keys are 1-based ``(source, target)``; zero counts are omitted except that
    the loop at the length-``n`` vertex is always present as ``(1, 1): 1``.
    """
    b = b_matrix(t)
    arrows: dict[tuple[int, int], int] = {}
    for i in range(1, t.n + 1):
        for j in range(1, t.n + 1):
            if i == j:
                continue
            v = b[i - 1, j - 1]
            if j == 1:
                if v % 2:
                    raise InternalInvariantBroken(f"odd entry b_{i}1 = {v}")
                v //= 2
            if v > 0:
                arrows[(i, j)] = v
    arrows[(1, 1)] = 1
    return dict(sorted(arrows.items()))


def check_compatibility(m: Indec, ex: ExchangeData) -> bool:
    if not is_rigid_indec(m):
        raise NotRigid(f"{m} is not rigid")
    sm = shift(m)
    if ex.removed == sm or ex.replacement == sm:
        return True
    lhs = hom_dim_obj(m, ex.removed) + hom_dim_obj(m, ex.replacement)
    return lhs == max(hom_dim_obj(m, ex.U), hom_dim_obj(m, ex.U_prime))


def exchange_pairs(n: int) -> list[tuple[MaximalRigid, int, ExchangeData]]:
    """Every (T, k) with its exchange data, T over the full census."""
    out = []
    for t in enum_maximal_rigids(n):
        for k in range(1, n + 1):
            out.append((t, k, mutate_rigid(t, k)[1]))
    return out


def mutation_closure(start: MaximalRigid) -> set[frozenset]:
    seen = {start.key}
    frontier = [start]
    while frontier:
        nxt = []
        for t in frontier:
            for k in range(1, t.n + 1):
                t2, _ = mutate_rigid(t, k)
                if t2.key not in seen:
                    seen.add(t2.key)
                    nxt.append(t2)
        frontier = nxt
    return seen


__all__ = [
    "ExchangeData",
    "MaximalRigid",
    "RigidTable",
    "b_matrix",
    "check_compatibility",
    "enum_maximal_rigids",
    "enum_rigid_indecs",
    "exchange_pairs",
    "exchange_triangles",
    "mutate_rigid",
    "mutation_closure",
    "parse_indec",
    "quiver_arrows",
    "rigid_table",
    "skew_symmetrizer",
    "standard_maximal_rigid",
]
