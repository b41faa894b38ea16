"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line."""

import time
from pathlib import Path

from ctube.cli import main
from ctube.cluster import all_c_vectors, enumerate_pattern
from ctube.intmat import IntMatrix
from ctube.laurent import LaurentPoly
from ctube.rigid import MaximalRigid, b_matrix
from ctube.suites import run_suite
from ctube.tube import Indec

GOLDEN = Path(__file__).parent / "golden" / "n2_pattern.json"


def _suites(name, ns):
    start = time.perf_counter()
    reports = [run_suite(name, n) for n in ns]
    elapsed = time.perf_counter() - start
    failed = [f"n={r.n}: {c.description}" for r in reports for c in r.failures()]
    return reports, failed, elapsed


def _detail(failed, elapsed, limit=None):
    parts = [f"{elapsed:.2f}s" + (f" < {limit}s" if limit else "")]
    if failed:
        parts.append(f"first failure {failed[0]}")
    return ", ".join(parts)


def test_criterion_01_hom_oracle(record_criterion):
    reports, failed, el = _suites("hom-oracle", range(1, 6))
    pairs = sum(r.summary["pairs"] for r in reports)
    ok = not failed and el < 10
    record_criterion(1, "hom formula = representation oracle, p=2..6, b<=2p", ok, f"{pairs} pairs, " + _detail(failed, el, 10))
    assert not failed, failed[:3]
    assert el < 10


def test_criterion_02_census(record_criterion):
    reports, failed, el = _suites("maximal-rigid-census", range(1, 6))
    counts = [r.summary["count"] for r in reports]
    ok = not failed and counts == [2, 6, 20, 70, 252] and el < 30
    record_criterion(2, "census binom(2n,n), one length-n summand, n=1..5", ok, f"{counts}, " + _detail(failed, el, 30))
    assert counts == [2, 6, 20, 70, 252]
    assert not failed, failed[:3]
    assert el < 30


def test_criterion_03_matrix_commutation(record_criterion):
    _, failed, el = _suites("matrix-commutation", range(1, 5))
    ok = not failed and el < 60
    record_criterion(3, "mu_k(B_T) = B_(mu_k T), n=1..4", ok, _detail(failed, el, 60))
    assert not failed, failed[:3]
    assert el < 60


def test_criterion_04_exchange_triangles(record_criterion):
    _, failed, el = _suites("exchange-triangles", range(1, 5))
    record_criterion(4, "exchange middles = minimal approximations, n<=4", not failed, _detail(failed, el))
    assert not failed, failed[:3]


def test_criterion_05_compatibility(record_criterion):
    _, failed, el = _suites("compatibility", range(1, 5))
    record_criterion(5, "exchange compatibility for every rigid M, n<=4", not failed, _detail(failed, el))
    assert not failed, failed[:3]


def test_criterion_06_denominators(record_criterion):
    reports, failed, el = _suites("denominator", range(1, 5))
    vars_ = sum(r.summary["variables_checked"] for r in reports)
    ok = not failed and el < 300
    record_criterion(6, "den(X_M) = rank vector, every initial T, n<=4", ok, f"{vars_} variables, " + _detail(failed, el, 300))
    assert not failed, failed[:3]
    assert el < 300


def test_criterion_07_dvector_properties(record_criterion):
    _, failed, el = _suites("dvector-props", range(1, 4))
    record_criterion(7, "d-vectors nonnegative, zero iff sharing a cluster, n<=3", not failed, _detail(failed, el))
    assert not failed, failed[:3]


def test_criterion_08_independence(record_criterion):
    _, failed, el = _suites("independence", range(1, 5))
    record_criterion(8, "det(D-matrix) != 0 at every cluster, n<=4", not failed, _detail(failed, el))
    assert not failed, failed[:3]


def test_criterion_09_c_vectors(record_criterion):
    _, failed, el = _suites("cvectors", range(1, 5))
    t = MaximalRigid(2, [Indec(1, 2, 3), Indec(1, 1, 3)])
    pos = {(1, 0), (0, 1), (1, 1), (1, 2)}
    exact = all_c_vectors(enumerate_pattern(t)) == pos | {(-a, -b) for a, b in pos}
    ok = not failed and exact
    record_criterion(9, "positive c-vectors = rank vectors, |cv| = 2n^2, n<=4", ok, _detail(failed, el))
    assert exact
    assert not failed, failed[:3]


def test_criterion_10_g_vectors(record_criterion):
    _, failed, el = _suites("gvectors", range(1, 4))
    record_criterion(10, "g-vector = index of the unshifted object, n<=3", not failed, _detail(failed, el))
    assert not failed, failed[:3]


def test_criterion_11_gdc_identity(record_criterion):
    _, failed, el = _suites("gdc-identity", range(1, 5))
    record_criterion(11, "G^tr D C = D and sign-coherence at every seed, n<=4", not failed, _detail(failed, el))
    assert not failed, failed[:3]


def test_criterion_12_worked_fixture(record_criterion, tmp_path, capsys):
    t = MaximalRigid(2, [Indec(1, 2, 3), Indec(1, 1, 3)])
    out = tmp_path / "pattern.json"
    code = main(["cluster-pattern", "--n", "2", "--t", "(1,2);(1,1)", "--out", str(out)])
    capsys.readouterr()
    byte_exact = code == 0 and out.read_bytes() == GOLDEN.read_bytes()

    recs = enumerate_pattern(t).records
    x2p = LaurentPoly(4, {(1, -1, 0, 0): 1, (0, -1, 0, 1): 1})
    x1p = LaurentPoly(4, {(-1, 2, 1, 0): 1, (-1, 0, 0, 0): 1})
    a, b = recs[Indec(1, 1, 3)], recs[Indec(2, 2, 3)]
    values = (
        b_matrix(t) == IntMatrix([[0, -1], [2, 0]])
        and (a.variable, a.den, a.g) == (x2p, (0, 1), (1, -1))
        and (b.variable, b.den, b.g) == (x1p, (1, 0), (-1, 0))
    )
    record_criterion(
        12, "n=2 worked fixture and byte-exact golden JSON", byte_exact and values,
        f"golden {'identical' if byte_exact else 'differs'}, values {'match' if values else 'differ'}",
    )
    assert values
    assert byte_exact
