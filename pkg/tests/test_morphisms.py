"""The explicit morphism model, checked against representation-level matrices."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import indecs
from ctube import morphisms as mm
from ctube.rep_oracle import basis_positions, build_rep, hom_dim_oracle
from ctube.tube import Indec, TubeObject, hom_cluster_dim, hom_tube_dim


def tube_map_matrix(x: Indec, y: Indec, k: int) -> dict[int, int]:
    """The map e_i -> f_{i-k} (1-based, zero for i <= k) as a dict on basis indices."""
    return {i: i - k for i in range(k + 1, x.b + 1)}


def is_intertwiner(x: Indec, y: Indec, f: dict[int, int]) -> bool:
    px, py = basis_positions(x), basis_positions(y)
    for i, j in f.items():
        if px[i - 1][0] != py[j - 1][0]:
            return False
        # arrow: e_i -> e_{i-1}; must commute with f
        lhs = f.get(i - 1) if i > 1 else None
        rhs = j - 1 if j > 1 else None
        if lhs != rhs:
            return False
    return True


@given(st.integers(2, 5).flatmap(lambda p: st.tuples(indecs(p=p), indecs(p=p))))
def test_tube_basis_maps_are_homomorphisms(xy):
    x, y = xy
    ks = mm.tube_basis(x, y)
    assert len(ks) == hom_tube_dim(x, y) == hom_dim_oracle(x, y)
    for k in ks:
        assert is_intertwiner(x, y, tube_map_matrix(x, y, k))


@given(st.integers(2, 4).flatmap(lambda p: st.tuples(indecs(p=p), indecs(p=p), indecs(p=p))))
def test_tube_composition_matches_matrices(xyz):
    x, y, z = xyz
    for k in mm.tube_basis(x, y):
        for m in mm.tube_basis(y, z):
            f, g = tube_map_matrix(x, y, k), tube_map_matrix(y, z, m)
            comp = {i: g[j] for i, j in f.items() if j in g}
            got = mm.compose(x, y, z, ("T", k), ("T", m))
            if comp:
                assert got == ("T", k + m)
                assert comp == tube_map_matrix(x, z, k + m)
            else:
                assert got is None


@given(st.integers(2, 5).flatmap(lambda p: st.tuples(indecs(p=p), indecs(p=p))))
def test_basis_size_is_cluster_hom(xy):
    x, y = xy
    assert len(mm.hom_basis(x, y)) == hom_cluster_dim(x, y)


def test_gabriel_quiver_small():
    t = [Indec(1, 2, 3), Indec(1, 1, 3)]
    assert mm.gabriel_quiver(t) == {(1, 1): 1, (2, 1): 1}


def test_approximations_small():
    tbar = [Indec(1, 2, 3)]
    assert mm.minimal_right_approximation(Indec(2, 1, 3), tbar) == TubeObject([Indec(1, 2, 3)])
    assert mm.minimal_right_approximation(Indec(1, 1, 3), tbar) == TubeObject()
    tbar = [Indec(1, 1, 3)]
    assert mm.minimal_right_approximation(Indec(1, 2, 3), tbar) == TubeObject([Indec(1, 1, 3)] * 2)


@pytest.mark.parametrize("p", [3, 4])
def test_radical_excludes_identity_only(p):
    for a in range(1, p + 1):
        for b in range(1, p):
            x = Indec(a, b, p)
            basis = mm.hom_basis(x, x)
            assert ("T", 0) in basis
            assert len(mm._radical_basis(x, x)) == len(basis) - 1
