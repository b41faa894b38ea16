import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctube.errors import LaurentViolation, Undefined
from ctube.laurent import LaurentPoly

NV = 3


def polys(max_terms=5, lo=-2, hi=3):
    term = st.tuples(st.tuples(*[st.integers(lo, hi)] * NV), st.integers(-4, 4))
    return st.lists(term, max_size=max_terms).map(lambda ts: LaurentPoly(NV, ts))


def x(i):
    return LaurentPoly.variable(4, i)


def test_basic_arithmetic():
    one = LaurentPoly.constant(4)
    p = x(1) + x(4)
    assert (p * p).terms == {(2, 0, 0, 0): 1, (1, 0, 0, 1): 2, (0, 0, 0, 2): 1}
    assert p - p == LaurentPoly(4)
    assert (x(2) ** -2) * x(2) ** 2 == one
    with pytest.raises(LaurentViolation):
        (x(1) + x(2)) ** -1


def test_exact_division_examples():
    num = x(1) + x(4)
    assert num.exact_div(x(2)) == LaurentPoly(4, {(1, -1, 0, 0): 1, (0, -1, 0, 1): 1})
    q = (x(2) ** 2 * x(3) + LaurentPoly.constant(4)).exact_div(x(1))
    assert q.terms == {(-1, 2, 1, 0): 1, (-1, 0, 0, 0): 1}
    with pytest.raises(LaurentViolation):
        (x(1) + LaurentPoly.constant(4)).exact_div(x(1) + x(2))
    with pytest.raises(LaurentViolation):
        x(1).exact_div(LaurentPoly(4))
    with pytest.raises(LaurentViolation):
        LaurentPoly(4, {(0, 0, 0, 0): 3}).exact_div(LaurentPoly(4, {(0, 0, 0, 0): 2}))


@settings(max_examples=150)
@given(polys(), polys().filter(lambda p: not p.is_zero()))
def test_division_inverts_multiplication(p, q):
    assert (p * q).exact_div(q) == p


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)


@given(polys())
def test_json_roundtrip(p):
    assert LaurentPoly.from_json(NV, p.to_json()) == p
    exps = [t["exp"] for t in p.to_json()]
    assert exps == sorted(exps)
    assert all(isinstance(t["coef"], str) for t in p.to_json())


def test_bigint_coefficients():
    big = LaurentPoly(2, {(1, 0): 10**40})
    assert (big * big).terms[(2, 0)] == 10**80
    assert big.to_json() == [{"exp": [1, 0], "coef": str(10**40)}]


def test_substitute_and_evaluate():
    p = x(2) ** 2 * x(3) + LaurentPoly.constant(4)
    s = p.substitute_ones([3, 4])
    assert s.terms == {(0, 2, 0, 0): 1, (0, 0, 0, 0): 1}
    assert p.evaluate([5, 2, 3, 7]) == 13


def test_min_exponents_of_zero():
    with pytest.raises(Undefined):
        LaurentPoly(2).min_exponents()


def test_str():
    assert str((x(1) + x(4)).exact_div(x(2))) == "(x1 + x4)/x2"
    assert str(x(1)) == "x1"
    assert str((x(1) + x(4)).exact_div(x(1) * x(2) ** 2)) == "(x1 + x4)/(x1*x2^2)"
    assert str(x(3) ** -1) == "1/x3"
    assert str(LaurentPoly(4)) == "0"
