import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, strategies as st

from hurwitz_be.special_functions import (
    DEFAULT_CONFIG,
    EULER_GAMMA,
    ConvergenceError,
    DomainError,
    EvalConfig,
    SeriesValue,
    bernoulli,
    digamma,
    euler_gamma,
    hurwitz_zeta,
    hurwitz_zeta_diff,
    log_gamma,
    polygamma,
)
from hurwitz_be.verification import brute_force_zeta
from oracles import ZETA3, assert_rel, gamma_oracle, mp_zeta_diff


# -- hurwitz_zeta ------------------------------------------------------------------


def test_zeta_2_1_is_pi_squared_over_6():
    v = hurwitz_zeta(2, 1)
    assert abs(v.value - math.pi**2 / 6) <= 1e-12
    assert math.pi**2 / 6 in brute_force_zeta(2, 1, 10**6)


def test_zeta_3_shift_by_one():
    assert abs(hurwitz_zeta(3, 2).value - (hurwitz_zeta(3, 1).value - 1)) <= 1e-12
    assert abs(hurwitz_zeta(3, 1).value - ZETA3) <= 1e-15


def test_zeta_half_shift():
    # zeta(x, 1/2) = (2^x - 1) zeta(x)
    assert abs(hurwitz_zeta(2, 0.5).value - math.pi**2 / 2) <= 1e-12 * math.pi**2 / 2
    for x in (1.5, 3.0, 7.25):
        assert_rel(hurwitz_zeta(x, 0.5).value, (2**x - 1) * hurwitz_zeta(x, 1).value, 1e-12)


@pytest.mark.parametrize("x, s", [(1.0, 1.0), (0.5, 2.0), (2.0, 0.0), (2.0, -1.0), (math.nan, 1.0), (2.0, math.inf)])
def test_zeta_domain(x, s):
    with pytest.raises(DomainError):
        hurwitz_zeta(x, s)


def test_zeta_convergence_error_when_budget_too_small():
    with pytest.raises(ConvergenceError):
        hurwitz_zeta(1.0001, 1e-3, EvalConfig(max_terms=2))


@given(st.floats(1.01, 12.0), st.floats(0.01, 30.0))
def test_zeta_matches_mpmath_within_its_bound(x, s):
    v = hurwitz_zeta(x, s)
    with mp.workdps(30):
        ref = mp.zeta(mp.mpf(x), mp.mpf(s))
    assert v.error_bound <= DEFAULT_CONFIG.rel_tol * v.value
    assert abs(mp.mpf(v.value) - ref) <= v.error_bound + 1e-16 * ref


@given(st.floats(1.05, 40.0), st.floats(0.05, 50.0))
def test_zeta_recurrence(x, s):
    lhs = hurwitz_zeta(x, s).value
    rhs = hurwitz_zeta(x, s + 1).value + s**-x
    assert abs(lhs - rhs) <= 1e-11 * abs(lhs)


@pytest.mark.parametrize("x", [1.5, 2.0, 3.7, 10.0])
@pytest.mark.parametrize("s", [0.3, 1.0, 2.5, 8.0])
def test_zeta_recurrence_grid(x, s):
    z = hurwitz_zeta(x, s).value
    assert abs(z - hurwitz_zeta(x, s + 1).value - s**-x) <= 1e-11 * z


@given(st.floats(1.05, 30.0), st.floats(0.05, 20.0), st.floats(0.01, 5.0))
def test_zeta_decreasing_in_s(x, s, ds):
    assert hurwitz_zeta(x, s + ds).value < hurwitz_zeta(x, s).value


def test_zeta_inside_brute_force_interval_on_grid():
    xs = [1.5, 2.0, 2.5, 3.0, 4.0, 5.0, 7.0, 10.0, 15.0, 20.0]
    ss = [0.1, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 25.0, 50.0]
    for x in xs:
        for s in ss:
            iv = brute_force_zeta(x, s, 10**6)
            v = hurwitz_zeta(x, s)
            assert iv.lo - v.error_bound <= v.value <= iv.hi + v.error_bound, (x, s)


# -- hurwitz_zeta_diff -------------------------------------------------------------


def test_zeta_diff_examples():
    assert abs(hurwitz_zeta_diff(1, 1, 1).value - 1.0) <= 1e-14
    assert abs(hurwitz_zeta_diff(2, 1, 2).value - 0.25) <= 1e-15
    assert abs(hurwitz_zeta_diff(1, 2, 1).value - 1.5) <= 1e-14


@given(st.floats(1.0, 30.0), st.floats(1e-8, 20.0), st.floats(0.05, 20.0))
def test_zeta_diff_matches_high_precision(x, a, b):
    v = hurwitz_zeta_diff(x, a, b)
    ref = mp_zeta_diff(x, a, b)
    assert v.value > 0
    assert abs(mp.mpf(v.value) - ref) <= v.error_bound + 1e-15 * ref


def test_zeta_diff_tiny_a_no_cancellation():
    # d/ds zeta(x, s) = -x zeta(x + 1, s)
    a = 1e-10
    v = hurwitz_zeta_diff(1.5, a, 1.0).value
    assert_rel(v, a * 1.5 * hurwitz_zeta(2.5, 1.0).value, 1e-9)


@given(st.floats(1.1, 20.0), st.floats(0.05, 5.0), st.floats(0.1, 5.0))
def test_zeta_diff_agrees_with_difference_of_zetas(x, a, b):
    d = hurwitz_zeta_diff(x, a, b)
    z1, z2 = hurwitz_zeta(x, b), hurwitz_zeta(x, a + b)
    slack = d.error_bound + z1.error_bound + z2.error_bound + 4e-16 * (z1.value + z2.value)
    assert abs(d.value - (z1.value - z2.value)) <= slack


def test_zeta_diff_domain():
    for args in [(0.99, 1, 1), (2, 0, 1), (2, 1, 0), (2, -1, 1), (math.inf, 1, 1)]:
        with pytest.raises(DomainError):
            hurwitz_zeta_diff(*args)


# -- digamma / polygamma -----------------------------------------------------------


def test_euler_gamma_constant():
    assert euler_gamma() == EULER_GAMMA
    assert abs(EULER_GAMMA - gamma_oracle()) <= 1e-16


def test_digamma_examples():
    g = gamma_oracle()
    assert abs(digamma(1) + g) <= 1e-12
    assert abs(digamma(2) - (1 - g)) <= 1e-12
    assert abs(digamma(0.5) - (-g - 2 * math.log(2))) <= 1e-12


@given(st.floats(1e-3, 1e4))
def test_digamma_matches_mpmath(s):
    ref = float(mp.digamma(mp.mpf(s)))
    assert abs(digamma(s) - ref) <= 1e-14 * max(1.0, abs(ref)) + 1e-15 / s


@given(st.floats(0.01, 500.0))
def test_digamma_duplication(s):
    lhs = digamma(2 * s)
    rhs = 0.5 * digamma(s) + 0.5 * digamma(s + 0.5) + math.log(2)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), 1 / s)


def test_digamma_domain():
    for s in (0.0, -1.0, math.nan):
        with pytest.raises(DomainError):
            digamma(s)


def test_polygamma_examples():
    assert abs(polygamma(1, 1) - math.pi**2 / 6) <= 1e-14
    assert abs(polygamma(1, 2) - (math.pi**2 / 6 - 1)) <= 1e-14
    assert abs(polygamma(2, 1) + 2 * ZETA3) <= 1e-14


@given(st.integers(1, 30), st.floats(0.05, 100.0))
def test_polygamma_sign_and_value(m, s):
    v = polygamma(m, s)
    assert (-1) ** (m + 1) * v > 0
    ref = mp.polygamma(m, mp.mpf(s))
    assert abs(mp.mpf(v) - ref) <= 1e-13 * abs(ref)


def test_polygamma_errors():
    with pytest.raises(DomainError):
        polygamma(0, 1.0)
    with pytest.raises(DomainError):
        polygamma(65, 1.0)
    with pytest.raises(DomainError):
        polygamma(1.5, 1.0)
    with pytest.raises(DomainError):
        polygamma(1, 0.0)
    with pytest.raises(OverflowError):
        polygamma(64, 1e-5)


# -- log_gamma, Bernoulli numbers, configuration -----------------------------------


def test_log_gamma_examples():
    assert log_gamma(1) == 0.0
    assert abs(log_gamma(5) - math.log(24)) <= 1e-14
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) <= 1e-14
    with pytest.raises(DomainError):
        log_gamma(0)


@given(st.floats(0.01, 100.0))
def test_log_gamma_duplication(s):
    lhs = log_gamma(2 * s)
    rhs = (2 * s - 1) * math.log(2) - 0.5 * math.log(math.pi) + log_gamma(s) + log_gamma(s + 0.5)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


def test_bernoulli_numbers():
    assert bernoulli(0) == 1.0
    assert bernoulli(1) == -0.5
    assert bernoulli(2) == 1 / 6
    assert bernoulli(3) == 0.0
    assert bernoulli(12) == float(Fraction(-691, 2730))
    assert bernoulli(20) == float(Fraction(-174611, 330))
    for n in (30, 46, 62):
        assert_rel(bernoulli(n), mp.bernoulli(n), 1e-15)
    with pytest.raises(DomainError):
        bernoulli(63)


def test_eval_config_validation():
    for kw in ({"rel_tol": 0.0}, {"rel_tol": 1e-3}, {"max_terms": 0},
               {"em_bernoulli_terms": 1}, {"em_bernoulli_terms": 31}):
        with pytest.raises(ValueError):
            EvalConfig(**kw)
    assert EvalConfig(rel_tol=1e-6).rel_tol == 1e-6


def test_series_value_validation():
    assert float(SeriesValue(1.5, 0.0, 3)) == 1.5
    with pytest.raises(ValueError):
        SeriesValue(1.0, -1e-3, 3)
    with pytest.raises(ValueError):
        SeriesValue(1.0, math.nan, 3)


def test_loose_tolerance_still_within_bound():
    cfg = EvalConfig(rel_tol=1e-6)
    v = hurwitz_zeta(1.2, 0.3, cfg)
    with mp.workdps(30):
        ref = mp.zeta(mp.mpf(1.2), mp.mpf(0.3))
    assert abs(mp.mpf(v.value) - ref) <= v.error_bound
    assert v.error_bound <= 1e-6 * v.value
