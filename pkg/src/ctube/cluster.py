"""Cluster patterns with principal coefficients, tracked against rigid objects.

Ambient variables are ``x_1..x_n`` (initial cluster) and ``x_{n+1}..x_{2n}``
(coefficients).  The seed at a vertex carries the rigid object attached to each
cluster variable; the initial cluster is attached to ``Sigma T``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BadDirection, GradingViolation, InternalInvariantBroken, Undefined
from .intmat import IntMatrix
from .laurent import LaurentPoly
from .rigid import MaximalRigid, b_matrix, mutate_rigid
from .tube import Indec, shift_inv


def _sgn(v: int) -> int:
    return (v > 0) - (v < 0)


def mutate_matrix(m: IntMatrix, k: int) -> IntMatrix:
    """Matrix mutation in direction ``k`` (1-based) applied to every row."""
    n = m.ncols
    if not 1 <= k <= n:
        raise BadDirection(f"direction {k} outside 1..{n}")
    k -= 1
    rows = m.rows
    rk = rows[k]
    out = []
    for i, row in enumerate(rows):
        bik = row[k]
        if i == k:
            out.append([-v for v in row])
            continue
        s = _sgn(bik)
        new = []
        for j, v in enumerate(row):
            if j == k:
                new.append(-v)
            else:
                prod = bik * rk[j]
                new.append(v + s * prod if prod > 0 else v)
        out.append(new)
    return IntMatrix(out, ncols=n)


def extended_matrix(b: IntMatrix, coefficients: bool = True) -> IntMatrix:
    """Stack ``b`` over the identity (principal coefficients) or over zeros."""
    n = b.nrows
    bottom = IntMatrix.identity(n) if coefficients else IntMatrix.zeros(n, n)
    return IntMatrix(list(b.rows) + list(bottom.rows), ncols=n)


@dataclass(frozen=True)
class Seed:
    matrix: IntMatrix
    cluster: tuple[LaurentPoly, ...]
    objects: MaximalRigid

    @property
    def n(self) -> int:
        return self.matrix.ncols

    @property
    def key(self) -> frozenset:
        return self.objects.key

    def principal(self) -> IntMatrix:
        return self.matrix.submatrix(slice(0, self.n))

    def coefficient_part(self) -> IntMatrix:
        return self.matrix.submatrix(slice(self.n, 2 * self.n))

    def variable_of(self, obj: Indec) -> LaurentPoly:
        return self.cluster[self.objects.summands.index(obj)]


@dataclass(frozen=True)
class ClusterRecord:
    object: Indec
    variable: LaurentPoly
    den: tuple[int, ...]
    g: tuple[int, ...] | None  # None without principal coefficients

    def to_json(self) -> dict:
        return {
            "object": self.object.to_json(),
            "terms": self.variable.to_json(),
            "den": list(self.den),
            "g": None if self.g is None else list(self.g),
        }


def initial_seed(t: MaximalRigid, coefficients: bool = True) -> Seed:
    """Seed at the root: matrix ``[B_T; I]``, cluster ``x_1..x_n`` attached to ``Sigma T``."""
    n = t.n
    m = extended_matrix(b_matrix(t), coefficients)
    xs = tuple(LaurentPoly.variable(2 * n, i) for i in range(1, n + 1))
    objs = MaximalRigid(n, t.shifted(), validate=False)
    return Seed(m, xs, objs)


def exchange_numerator(seed: Seed, k: int) -> LaurentPoly:
    """``prod x_i^[b_ik]_+ + prod x_i^[-b_ik]_+`` over all ``2n`` rows."""
    n = seed.n
    nv = 2 * n
    pos = LaurentPoly.constant(nv)
    neg = LaurentPoly.constant(nv)
    pos_frozen = [0] * nv
    neg_frozen = [0] * nv
    for i in range(2 * n):
        b = seed.matrix[i, k - 1]
        if not b:
            continue
        if i < n:
            term = seed.cluster[i] ** abs(b)
            if b > 0:
                pos = pos * term
            else:
                neg = neg * term
        elif b > 0:
            pos_frozen[i] = b
        else:
            neg_frozen[i] = -b
    pos = pos * LaurentPoly.monomial(pos_frozen)
    neg = neg * LaurentPoly.monomial(neg_frozen)
    return pos + neg


def mutate_seed(seed: Seed, k: int, known: LaurentPoly | None = None) -> Seed:
    """Mutate in direction ``k``.

    With ``known`` given (the variable already attached to the incoming
    object), the exchange relation is verified by multiplication instead of
    recomputed by division.
    """
    n = seed.n
    if not 1 <= k <= n:
        raise BadDirection(f"direction {k} outside 1..{n}")
    num = exchange_numerator(seed, k)
    xk = seed.cluster[k - 1]
    if known is None:
        new = num.exact_div(xk)
    else:
        if known * xk != num:
            raise InternalInvariantBroken("exchange relation fails for a previously found variable")
        new = known
    objs, _ = mutate_rigid(seed.objects, k)
    cluster = list(seed.cluster)
    cluster[k - 1] = new
    return Seed(mutate_matrix(seed.matrix, k), tuple(cluster), objs)


def denominator_vector(v: LaurentPoly, n: int | None = None) -> tuple[int, ...]:
    """``d_i = -min exponent of x_i``, for the first ``n`` variables."""
    if v.is_zero():
        raise Undefined("denominator vector of zero")
    n = v.nvars // 2 if n is None else n
    mins = v.min_exponents()
    return tuple(-mins[i] for i in range(n))


def grading_degrees(b0: IntMatrix) -> list[tuple[int, ...]]:
    """deg x_i = e_i and deg x_{n+j} = -(column j of the initial principal part)."""
    n = b0.nrows
    degs = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    for j in range(n):
        degs.append(tuple(-b0[i, j] for i in range(n)))
    return degs


def g_vector(v: LaurentPoly, b0: IntMatrix) -> tuple[int, ...]:
    if v.is_zero():
        raise Undefined("g-vector of zero")
    degs = grading_degrees(b0)
    n = b0.nrows
    out = None
    for e in v.terms:
        d = tuple(sum(e[r] * degs[r][c] for r in range(2 * n)) for c in range(n))
        if out is None:
            out = d
        elif d != out:
            raise GradingViolation(f"terms of degree {out} and {d} in one variable")
    return out


def c_matrix(seed: Seed) -> IntMatrix:
    c = seed.coefficient_part()
    for j, col in enumerate(c.columns(), 1):
        if any(v > 0 for v in col) and any(v < 0 for v in col):
            raise InternalInvariantBroken(f"c-vector {j} = {col} is not sign-coherent")
    return c


def specialize_coefficients(v: LaurentPoly) -> LaurentPoly:
    n = v.nvars // 2
    return v.substitute_ones(range(n + 1, 2 * n + 1))


@dataclass
class Pattern:
    """Result of a full traversal from one initial seed."""

    initial: MaximalRigid
    seeds: list[Seed] = field(default_factory=list)
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    records: dict[Indec, ClusterRecord] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.initial.n

    def sorted_records(self) -> list[ClusterRecord]:
        return [self.records[o] for o in sorted(self.records)]


def _check_same_seed(a: Seed, b: Seed) -> None:
    perm = [a.objects.summands.index(x) for x in b.objects.summands]
    n = a.n
    # reindex a's rows and columns to b's slot order; coefficient rows keep their order
    rows = [a.matrix.rows[perm[i]] for i in range(n)] + list(a.matrix.rows[n:])
    reindexed = IntMatrix([[r[perm[j]] for j in range(n)] for r in rows], ncols=n)
    if reindexed != b.matrix:
        raise InternalInvariantBroken(f"two paths reach cluster {b.objects} with different matrices")
    for i, x in enumerate(b.objects.summands):
        if a.cluster[perm[i]] != b.cluster[i]:
            raise InternalInvariantBroken(f"two paths give different variables for {x}")


def enumerate_pattern(
    start: Seed | MaximalRigid,
    coefficients: bool = True,
    max_seeds: int | None = None,
) -> Pattern:
    """Breadth-first traversal of the exchange graph with seed deduplication.

    Every edge is checked: the first time an object appears its variable is
    obtained by exact Laurent division, later arrivals are verified against it.
    Seeds reached along different paths must agree (path independence).
    """
    if isinstance(start, MaximalRigid):
        t0 = start
        s0 = initial_seed(start, coefficients)
    else:
        s0 = start
        t0 = MaximalRigid(start.n, [x for x in _unshift(start.objects)], validate=False)
    n = s0.n
    b0 = s0.principal()
    pattern = Pattern(initial=t0)
    index: dict[frozenset, int] = {s0.key: 0}
    pattern.seeds.append(s0)
    variables: dict[Indec, LaurentPoly] = dict(zip(s0.objects.summands, s0.cluster))
    queue = deque([0])
    edge_set: set[tuple[int, int, int]] = set()
    while queue:
        si = queue.popleft()
        seed = pattern.seeds[si]
        for k in range(1, n + 1):
            target_obj, _ = mutate_rigid(seed.objects, k)
            incoming = target_obj[k]
            nxt = mutate_seed(seed, k, known=variables.get(incoming))
            variables.setdefault(incoming, nxt.cluster[k - 1])
            key = nxt.key
            if key in index:
                ti = index[key]
                _check_same_seed(pattern.seeds[ti], nxt)
            else:
                if max_seeds is not None and len(pattern.seeds) >= max_seeds:
                    raise InternalInvariantBroken(f"seed cap {max_seeds} exceeded")
                ti = len(pattern.seeds)
                index[key] = ti
                pattern.seeds.append(nxt)
                queue.append(ti)
            # each edge is seen from both ends; keep the label from the earlier seed
            if si < ti:
                edge_set.add((si, ti, k))
    pattern.edges = sorted(edge_set)
    principal = s0.coefficient_part() == IntMatrix.identity(n)
    for obj, var in variables.items():
        g = g_vector(var, b0) if principal else None
        pattern.records[obj] = ClusterRecord(obj, var, denominator_vector(var, n), g)
    return pattern


def _unshift(objs: MaximalRigid) -> Iterable[Indec]:
    return (shift_inv(x) for x in objs.summands)


def all_c_vectors(pattern: Pattern) -> set[tuple[int, ...]]:
    out: set[tuple[int, ...]] = set()
    for s in pattern.seeds:
        out.update(c_matrix(s).columns())
    return out


def g_matrix(seed: Seed, b0: IntMatrix) -> IntMatrix:
    return IntMatrix.from_columns([g_vector(v, b0) for v in seed.cluster])
