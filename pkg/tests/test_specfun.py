"""Gamma and Gauss hypergeometric routines against mpmath."""

import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hartogs.errors import DomainError, NoConvergence, PoleError
from hartogs.specfun import (
    DEFAULT_IDENTITY_TOL,
    HypParams,
    IDENTITIES,
    SeriesControl,
    euler_integral,
    gamma,
    hyp2f1,
    hyp2f1_at_one,
    identity_check,
    identity_suite,
    log_gamma,
    pochhammer,
)

mp.mp.dps = 30

real_args = st.floats(min_value=-30.0, max_value=60.0, allow_nan=False)


def _far_from_pole(x: float) -> bool:
    return x > 0 or abs(x - round(x)) > 1e-6


@given(real_args)
def test_gamma_matches_mpmath(x):
    assume(_far_from_pole(x))
    ref = float(mp.gamma(x))
    assert gamma(x) == pytest.approx(ref, rel=2e-13)


@given(st.floats(min_value=1e-6, max_value=150.0))
def test_log_gamma_matches_mpmath(x):
    assert log_gamma(x) == pytest.approx(float(mp.loggamma(x)), rel=1e-13, abs=1e-13)


@pytest.mark.parametrize("n", range(1, 25))
def test_gamma_integers_are_exact_factorials(n):
    assert gamma(n) == float(math.factorial(n - 1))


def test_gamma_half_integers():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert gamma(1.5) == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-15)
    assert gamma(-0.5) == pytest.approx(-2 * math.sqrt(math.pi), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)


def test_gamma_overflow_and_log_domain():
    with pytest.raises(OverflowError):
        gamma(200.0)
    with pytest.raises(DomainError):
        log_gamma(-1.0)


@given(st.floats(min_value=-5, max_value=5, allow_nan=False), st.integers(min_value=0, max_value=20))
def test_pochhammer_matches_mpmath(a, m):
    assert pochhammer(a, m) == pytest.approx(float(mp.rf(a, m)), rel=1e-12, abs=1e-300)


def test_pochhammer_zero_and_negative():
    assert pochhammer(3.7, 0) == 1.0
    assert pochhammer(-2.0, 3) == 0.0
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


param = st.floats(min_value=-3.0, max_value=4.0, allow_nan=False)


@settings(max_examples=150, deadline=None)
@given(param, param, st.floats(min_value=0.1, max_value=5.0), st.floats(min_value=-0.95, max_value=0.95))
def test_hyp2f1_matches_mpmath(a, b, c, x):
    ref = float(mp.hyp2f1(a, b, c, x))
    assert hyp2f1(a, b, c, x) == pytest.approx(ref, rel=1e-11, abs=1e-12)


def test_hyp2f1_near_one_uses_transformation():
    # a + b > c: the Euler route keeps the sum cheap and accurate
    val = hyp2f1(1.5, 1.2, 2.0, 0.999)
    assert val == pytest.approx(float(mp.hyp2f1(1.5, 1.2, 2.0, 0.999)), rel=1e-11)


def test_hyp2f1_terminating():
    # F(-3, b; c; x) is a cubic
    b, c, x = 0.7, 1.3, 0.4
    ref = sum(mp.rf(-3, n) * mp.rf(b, n) / (mp.rf(c, n) * mp.factorial(n)) * x**n for n in range(4))
    assert hyp2f1(-3, b, c, x) == pytest.approx(float(ref), rel=1e-14)


def test_hyp2f1_array_matches_scalar():
    a = np.array([0.5, 1.0, 2.0])
    x = np.array([0.1, 0.5, 0.9])
    arr = hyp2f1(a, 0.3, 1.7, x)
    assert arr.shape == (3,)
    for i in range(3):
        assert arr[i] == pytest.approx(float(mp.hyp2f1(a[i], 0.3, 1.7, x[i])), rel=1e-12)


def test_hyp2f1_domain_and_pole():
    with pytest.raises(PoleError):
        hyp2f1(1, 1, -2, 0.3)
    with pytest.raises(DomainError):
        hyp2f1(1, 1, 2, 1.0)
    with pytest.raises(PoleError):
        HypParams(1.0, 1.0, 0.0)


def test_series_control_budget():
    with pytest.raises(NoConvergence):
        hyp2f1(0.5, 0.5, 1.0, 0.99, SeriesControl(rel_tol=1e-15, max_terms=10))
    with pytest.raises(ValueError):
        SeriesControl(rel_tol=0.0)


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=0.1, max_value=3.0),
    st.floats(min_value=0.1, max_value=3.0),
)
def test_gauss_sum_matches_mpmath(a, b, extra):
    c = a + b + extra
    assume(c > 0.05 and abs(c - a) > 1e-3 and abs(c - b) > 1e-3)
    ref = float(mp.hyp2f1(a, b, c, 1))
    assert hyp2f1_at_one(a, b, c) == pytest.approx(ref, rel=1e-11, abs=1e-13)


def test_gauss_sum_spot_value():
    # F(1/2, 1/2; 2; 1) = Gamma(2) Gamma(1) / Gamma(3/2)^2 = 4/pi
    assert hyp2f1_at_one(0.5, 0.5, 2.0) == pytest.approx(1.2732395447351628, rel=1e-14)


def test_gauss_sum_divergent():
    with pytest.raises(DomainError):
        hyp2f1_at_one(1.0, 1.0, 2.0)


@pytest.mark.parametrize("a,b,c,x", [(0.5, 0.5, 1.0, 0.3), (1.2, 0.7, 1.5, 0.8), (-0.5, 1.5, 2.5, 0.7)])
def test_euler_integral_matches_mpmath(a, b, c, x):
    assert euler_integral(a, b, c, x) == pytest.approx(float(mp.hyp2f1(a, b, c, x)), rel=1e-9)


@pytest.mark.parametrize("identity", IDENTITIES)
def test_identity_suite_entries_pass(identity):
    reports = {r.check_id: r for r in identity_suite(n_gamma=50, seed=1)}
    rep = reports[f"identity.{identity}"]
    assert rep.passed, rep.line()
    assert rep.tolerance == DEFAULT_IDENTITY_TOL[identity]


def test_identity_check_argument_errors():
    with pytest.raises(ValueError):
        identity_check("nonsense", z=1.0)
    with pytest.raises(ValueError):
        identity_check("recurrence")
    with pytest.raises(DomainError):
        identity_check("reflection", z=3.0)
    with pytest.raises(DomainError):
        identity_check("gauss_sum", params=(1.0, 1.0, 2.0), x=1.0)
    with pytest.raises(DomainError):
        identity_check("derivative", params=(1.0, 1.0, 2.0), x=0.3, k=3)


def test_identity_suite_deterministic():
    a = [r.to_dict() for r in identity_suite(n_gamma=20, seed=3)]
    b = [r.to_dict() for r in identity_suite(n_gamma=20, seed=3)]
    assert a == b
