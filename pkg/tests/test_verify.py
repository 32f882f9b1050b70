from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fewprimes.families import balog_wooley, geometric
from fewprimes.reports import exact_check, log_check, log_of, reports_to_csv
from fewprimes.suites import run_suite
from fewprimes.verify import (
    check_asymmetric_energy,
    check_balog_wooley,
    check_cauchy_schwarz_sumset,
    check_energy_interpolation,
    check_holder_energy,
    check_nondegenerate_energy,
    check_shkredov_steps,
    popular_set,
    report_exponents,
)
import oracles as o


def test_holder_examples():
    r = check_holder_energy([1, 2], 2)
    assert (r.lhs, r.rhs, r.holds) == (18, 16, True)
    r = check_holder_energy([9], 3)
    assert (r.lhs, r.rhs) == (1, 1)
    assert check_holder_energy(range(1, 11), 2).holds


def test_interpolation_equality_paths():
    A = list(range(10))
    r = check_energy_interpolation(A, 0, (1, 1, -1, -1), 1, 2)
    assert r.holds and r.context["count"] == r.context["E_2k"] == 670
    r = check_energy_interpolation(A, 0, (1, 1, 1, -1, -1, -1), 3, 3)
    assert r.holds and mpmath.almosteq(r.lhs, r.rhs, 1e-30)
    with pytest.raises(ValueError):
        check_energy_interpolation(A, 0, (1, 1, 1), 2, 2)


def test_interpolation_random():
    import numpy as np

    rng = np.random.default_rng(0)
    A = sorted(set(rng.integers(-40, 40, size=20).tolist()))
    for x in (0, 1, 5, -17, 60):
        assert check_energy_interpolation(A, x, (1, 1, 1, -1, -1, -1), 1, 3).holds


def test_popular_examples():
    ps = popular_set([0, 1])
    assert ps.K == Fraction(3, 2) and ps.C.elements == (0, 1, 2) and ps.mass == 4
    assert all(c.holds for c in ps.checks)
    ps = popular_set(range(1, 11))
    assert ps.mass >= 50 and Fraction(11) in ps.C
    assert all(c.holds for c in popular_set(range(1, 11), "differences").checks)


def test_shkredov_examples():
    i, ii, combined = check_shkredov_steps([0, 1], [0, 1], [1], 2)
    # mass 2 over |A||B| = 4 pairs: (1/2)^4 * 2^2 * 2^2 = 1
    assert (i.lhs, i.rhs, i.holds) == (2, 1, True)
    assert ii.holds and not combined.assertion
    A, B = [1, 2, 4], [0, 5]
    i, ii, _ = check_shkredov_steps(A, B, o.sumset(A, B), 3)
    assert i.lhs == i.rhs == 6**3


def test_asymmetric_examples():
    r = check_asymmetric_energy([0, 1], [0, 1], 2, 2)
    assert r.holds and r.context["E"] == 6 and mpmath.almosteq(r.lhs, r.rhs, 1e-30)
    assert check_asymmetric_energy(range(15), [3], 3, 2).holds
    with pytest.raises(ValueError):
        check_asymmetric_energy([1], [1], 1, 2)


def test_cauchy_schwarz_examples():
    r = check_cauchy_schwarz_sumset([0, 1], [0, 1])
    assert (r.lhs, r.rhs) == (18, 16)
    assert check_cauchy_schwarz_sumset(range(20), range(20)).holds
    assert check_cauchy_schwarz_sumset([1, 2, 3], [1000, 5000]).holds


def test_nondegenerate_check():
    r = check_nondegenerate_energy([1, 2, 3, 4], 2)
    assert (r.lhs, r.rhs, r.holds) == (16, o.energy_tuples([1, 2, 3, 4], 2), True)


def test_balog_wooley_checks():
    checks = {c.name: c for c in check_balog_wooley(8, 4)}
    assert checks["|AA| <= M^2 (2N - 1)"].holds
    assert checks["|A| = MN - N + 1"].lhs == 29
    assert not checks["E(A) / (N M^3)"].assertion


def test_report_exponents():
    row = report_exponents(geometric(2, 40), [2, 3])
    assert row["n"] == 40 and row["|AA|"] == 79 and row["|A+A|"] == 820
    assert float(row["log|A+A|/log|A|"]) > 1.8 and float(row["log|AA|/log|A|"]) < 1.2
    assert row["|2A|"] == row["|A+A|"]
    zero = report_exponents([0, 1, 2], [2])
    assert zero["|AA|"] is None and zero["log|AA|/log|A|"] == ""
    assert report_exponents(balog_wooley(4, 2))["|AA|"] <= 16 * 3


def test_check_modes():
    assert exact_check("x", 1, 1, "=").holds
    assert not exact_check("x", Fraction(1, 3), Fraction(1, 4), "<=").holds
    assert log_check("x", log_of(2), log_of(2) - mpmath.mpf("1e-12"), "<=").holds
    assert not log_check("x", log_of(2), log_of(2) - mpmath.mpf("1e-6"), "<=").holds


def test_report_serialisation():
    r = check_asymmetric_energy([0, 1], [0, 1], 2, 2)
    assert r.to_dict()["lhs"].startswith("mpf256:")
    text = reports_to_csv([r, exact_check("y", Fraction(1, 2), 1, "<=", n=3)])
    assert text.splitlines()[0] == "name,holds,mode,lhs,relation,rhs,params"
    assert text.splitlines()[2] == 'y,true,exact,1/2,<=,1,"{""n"":""3""}"'


ints = st.lists(st.integers(-20, 20), min_size=1, max_size=10, unique=True)


@settings(max_examples=60, deadline=None)
@given(ints, ints, st.integers(1, 3))
def test_unconditional_checks_hold(A, B, k):
    assert check_cauchy_schwarz_sumset(A, B).holds
    assert check_holder_energy(A, 2).holds
    for mode in ("sums", "differences"):
        assert all(c.holds for c in popular_set(A, mode).checks)
    C = sorted(o.sumset(A, B))[::2]
    i, ii, _ = check_shkredov_steps(A, B, C, k)
    assert i.holds and ii.holds
    for m, n in ((2, 2), (3, 2), (2, 3)):
        assert check_asymmetric_energy(A, B, m, n).holds


def test_suite_is_deterministic():
    a = [r.to_json() for r in run_suite("all", 3, 5)]
    b = [r.to_json() for r in run_suite("all", 3, 5)]
    assert a == b
    assert all(r.holds for r in run_suite("all", 3, 5) if r.assertion)
