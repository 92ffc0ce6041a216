"""Independent high-precision references for the tests."""

import math

import mpmath as mp

# inside brute_force_zeta(3, 1, 10**7); mpmath agrees
ZETA3 = 1.2020569031595942


def mp_zeta_diff(x, a, b, dps=40):
    """High-precision zeta(x, b) - zeta(x, a + b); x = 1 via digamma."""
    with mp.workdps(dps):
        a, b = mp.mpf(a), mp.mpf(b)
        if x == 1:
            return mp.digamma(a + b) - mp.digamma(b)
        return mp.zeta(mp.mpf(x), b) - mp.zeta(mp.mpf(x), a + b)


def mp_f(x, a, b, dps=40):
    with mp.workdps(dps):
        return float(mp_zeta_diff(x, a, b, dps) ** (1 / mp.mpf(x)))


def rel_err(got, want):
    return abs(got - want) / abs(want)


def assert_rel(got, want, tol):
    assert math.isfinite(got)
    assert rel_err(got, float(want)) <= tol, (got, float(want))


def gamma_oracle(n=1000):
    # H_n - ln n - 1/(2n) + 1/(12 n^2) - 1/(120 n^4); truncation below 1e-20
    with mp.workdps(40):
        h = mp.fsum(mp.mpf(1) / k for k in range(1, n + 1))
        n = mp.mpf(n)
        return float(h - mp.log(n) - 1 / (2 * n) + 1 / (12 * n**2) - 1 / (120 * n**4))
