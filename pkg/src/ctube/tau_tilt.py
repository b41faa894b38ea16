"""Module-side invariants over End(T): dimension and rank vectors, indices, G/C/D matrices.

Index vectors are computed by walking the exchange graph: an object lying in
some maximal rigid ``T_s`` has index ``e_slot`` there, and each step back
towards ``T`` rewrites the basis with one exchange triangle.  The triangle
used at slot ``k`` depends on the sign of the coefficient at ``k``.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .errors import InShift, InternalInvariantBroken, NotRigid, RankMismatch
from .intmat import IntMatrix
from .rigid import MaximalRigid, enum_rigid_indecs, mutate_rigid
from .tube import Indec, hom_cluster_dim, is_rigid_indec, shift_inv


def _require_rigid(t: MaximalRigid, m: Indec) -> None:
    if m.p != t.p:
        raise RankMismatch(f"{m} lives in rank {m.p}, expected {t.p}")
    if not is_rigid_indec(m):
        raise NotRigid(f"{m} is not rigid")


def f_dim_vector(t: MaximalRigid, m: Indec) -> tuple[int, ...]:
    """Dimension vector of Hom_C(T, m)."""
    _require_rigid(t, m)
    return tuple(hom_cluster_dim(ti, m) for ti in t.summands)


def in_shift(t: MaximalRigid, m: Indec) -> bool:
    return m in t.shifted()


def rank_vector(t: MaximalRigid, m: Indec) -> tuple[int, ...]:
    _require_rigid(t, m)
    if in_shift(t, m):
        raise InShift(f"{m} is a summand of Sigma T")
    d = f_dim_vector(t, m)
    if d[0] % 2:
        raise InternalInvariantBroken(f"odd loop-vertex entry in {d} for {m}")
    return (d[0] // 2,) + d[1:]


@lru_cache(maxsize=256)
def _bfs_tree(t: MaximalRigid) -> dict[frozenset, tuple[MaximalRigid, MaximalRigid | None, int]]:
    """key -> (object in slot order along the tree, parent, direction from parent)."""
    tree: dict[frozenset, tuple[MaximalRigid, MaximalRigid | None, int]] = {t.key: (t, None, 0)}
    queue = deque([t])
    while queue:
        cur = queue.popleft()
        for k in range(1, t.n + 1):
            nxt, _ = mutate_rigid(cur, k)
            if nxt.key not in tree:
                tree[nxt.key] = (nxt, cur, k)
                queue.append(nxt)
    return tree


def index(t: MaximalRigid, x: Indec) -> tuple[int, ...]:
    """Index of ``x`` with respect to ``t``, as coordinates in ``[T_1], ..., [T_n]``."""
    _require_rigid(t, x)
    n = t.n
    if x in t.summands:
        i = t.summands.index(x)
        return tuple(int(j == i) for j in range(n))
    tree = _bfs_tree(t)
    # nearest vertex (in BFS order) containing x
    host = None
    for node, _, _ in tree.values():
        if x in node.summands:
            host = node
            break
    if host is None:
        raise InternalInvariantBroken(f"{x} lies in no maximal rigid object")
    coeffs = {y: 0 for y in host.summands}
    coeffs[x] = 1
    cur = host
    while True:
        _, parent, k = tree[cur.key]
        if parent is None:
            break
        # cur = mu_k(parent); rewrite cur[k] in terms of parent's summands
        _, ex = mutate_rigid(cur, k)
        xk = cur[k]
        c = coeffs.pop(xk)
        middle = ex.U if c >= 0 else ex.U_prime
        for y in middle:
            coeffs[y] = coeffs.get(y, 0) + c
        coeffs[ex.replacement] = coeffs.get(ex.replacement, 0) - c
        cur = parent
    if set(coeffs) != set(t.summands):
        raise InternalInvariantBroken(f"index of {x} left terms outside T")
    return tuple(coeffs[y] for y in t.summands)


def index_table(t: MaximalRigid) -> dict[Indec, tuple[int, ...]]:
    return {x: index(t, x) for x in enum_rigid_indecs(t.n)}


def g_c_d_matrices(t: MaximalRigid, tt: MaximalRigid) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """``(G, C, D)`` for ``tt`` relative to ``t``.

    Column ``j`` of G is the index of ``tt_j``; C is the inverse transpose of
    G; column ``j`` of D is the dimension vector of Hom_C(T, tt_j), which is
    zero for summands of Sigma T.
    """
    if tt.n != t.n:
        raise RankMismatch(f"ranks {t.n} and {tt.n} differ")
    g = IntMatrix.from_columns([index(t, y) for y in tt.summands])
    if abs(g.det()) != 1:
        raise InternalInvariantBroken(f"G-matrix of {tt} is not unimodular")
    c = g.T.inverse()
    d = IntMatrix.from_columns([f_dim_vector(t, y) for y in tt.summands])
    return g, c, d


def cartan_via_duality(t: MaximalRigid, tt: MaximalRigid) -> IntMatrix:
    """Cartan matrix of End(Hom_C(T, tt)) as G^tr D; entry (i, j) is dim Hom(F tt_i, F tt_j)."""
    for y in tt.summands:
        if in_shift(t, y):
            raise InShift(f"{y} is a summand of Sigma T")
    g, _, d = g_c_d_matrices(t, tt)
    out = g.T @ d
    if out.det() == 0:
        raise InternalInvariantBroken(f"degenerate Cartan matrix for {tt}")
    return out


def positive_c_vectors(t: MaximalRigid) -> set[tuple[int, ...]]:
    return {rank_vector(t, m) for m in enum_rigid_indecs(t.n) if not in_shift(t, m)}


def denominator_of_object(t: MaximalRigid, m: Indec) -> tuple[int, ...]:
    """Expected denominator vector of the variable attached to ``m``: ``-e_i`` on Sigma T."""
    shifted = t.shifted()
    if m in shifted:
        i = shifted.index(m)
        return tuple(-int(j == i) for j in range(t.n))
    return rank_vector(t, m)


def denominator_matrix(t: MaximalRigid, objects) -> IntMatrix:
    return IntMatrix.from_columns([denominator_of_object(t, m) for m in objects])


def sigma_inverse(objects: MaximalRigid) -> MaximalRigid:
    """Maximal rigid whose shift is ``objects``, slot order kept."""
    return MaximalRigid(objects.n, [shift_inv(x) for x in objects.summands], validate=False)

