from fractions import Fraction

import pytest
from hypothesis import given

from conftest import indec_pairs, indecs
from ctube.errors import RankMismatch
from ctube.rep_oracle import _matmul, build_rep, hom_dim_oracle, rank
from ctube.tube import Indec, tau


def test_build_rep_dims():
    r = build_rep(Indec(1, 1, 3))
    assert r.dims == (1, 0, 0)
    assert all(not any(any(row) for row in m) for m in r.maps)
    assert build_rep(Indec(1, 3, 3)).dims == (1, 1, 1)
    assert build_rep(Indec(1, 4, 3)).dims == (2, 1, 1)


@given(indecs())
def test_rep_is_nilpotent_and_sized(x):
    r = build_rep(x)
    assert sum(r.dims) == x.b
    m = r.cycle_composite(x.a)
    power = m
    for _ in range(x.b):
        power = _matmul(power, m)
    assert all(v == 0 for row in power for v in row)


def test_socle_is_at_a():
    # the only basis vector killed by the arrow out of its vertex is e_1, at vertex a
    x = Indec(2, 5, 3)
    r = build_rep(x)
    killed = []
    for v in range(1, 4):
        mat = r.maps[v - 1]
        for c in range(r.dims[v - 1]):
            if all(mat[row][c] == 0 for row in range(len(mat))):
                killed.append(v)
    assert killed == [2]


@pytest.mark.parametrize(
    "x,y,want",
    [((1, 1), (1, 1), 1), ((1, 2), (1, 1), 0), ((1, 4), (1, 4), 2)],
)
def test_oracle_examples(x, y, want):
    assert hom_dim_oracle(Indec(*x, 3), Indec(*y, 3)) == want


def test_oracle_rank_mismatch():
    with pytest.raises(RankMismatch):
        hom_dim_oracle(Indec(1, 1, 2), Indec(1, 1, 3))


@given(indecs())
def test_identity_always_present(x):
    assert hom_dim_oracle(x, x) >= 1


@given(indec_pairs())
def test_tau_invariance(xy):
    x, y = xy
    assert hom_dim_oracle(tau(x), tau(y)) == hom_dim_oracle(x, y)


def test_sparse_rank():
    rows = [{0: Fraction(1), 1: Fraction(2)}, {0: Fraction(2), 1: Fraction(4)}, {2: Fraction(1)}]
    assert rank(rows) == 2
    assert rank([]) == 0
