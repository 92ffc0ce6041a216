"""Hurwitz zeta, digamma/polygamma and log-gamma in double precision.

The zeta routines use Euler-Maclaurin summation: a direct sum of the first
``N`` terms, the integral of the tail, and ``M`` Bernoulli corrections.  The
summand ``t -> (t + s)**-x`` (and the difference of two such summands) is
completely monotone, so the Euler-Maclaurin remainder is bounded by the first
omitted correction.  That bound, plus a rounding allowance, is returned as
``SeriesValue.error_bound``.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

__all__ = [
    "ConvergenceError",
    "DEFAULT_CONFIG",
    "DomainError",
    "EULER_GAMMA",
    "EvalConfig",
    "SeriesValue",
    "bernoulli",
    "digamma",
    "euler_gamma",
    "hurwitz_zeta",
    "hurwitz_zeta_diff",
    "log_gamma",
    "polygamma",
]

EULER_GAMMA = 0.5772156649015329
MAX_POLYGAMMA_ORDER = 64

_EPS = 2.0**-52


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class ConvergenceError(ArithmeticError):
    """The requested accuracy was not reached within the term budget."""


@dataclass(frozen=True)
class SeriesValue:
    value: float
    error_bound: float
    terms_used: int

    def __post_init__(self):
        if not (self.error_bound >= 0 and math.isfinite(self.error_bound)):
            raise ValueError(f"invalid error bound {self.error_bound!r}")
        if self.terms_used < 0:
            raise ValueError("terms_used must be non-negative")

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class EvalConfig:
    rel_tol: float = 1e-12
    max_terms: int = 10**7
    em_bernoulli_terms: int = 12

    def __post_init__(self):
        if not 0 < self.rel_tol <= 1e-6:
            raise ValueError(f"rel_tol must lie in (0, 1e-6], got {self.rel_tol!r}")
        if self.max_terms < 1:
            raise ValueError("max_terms must be >= 1")
        if not 2 <= self.em_bernoulli_terms <= 30:
            raise ValueError("em_bernoulli_terms must lie in [2, 30]")


DEFAULT_CONFIG = EvalConfig()


def _bernoulli_table(n_max: int) -> tuple[Fraction, ...]:
    # Akiyama-Tanigawa; yields B_1 = +1/2, irrelevant since only even indices are used.
    out = []
    a = [Fraction(0)] * (n_max + 1)
    for m in range(n_max + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return tuple(out)


_BERNOULLI = _bernoulli_table(62)
# _EM_COEF[j] = B_{2j} / (2j)!, j = 1..31
_EM_COEF = (0.0,) + tuple(
    float(_BERNOULLI[2 * j] / math.factorial(2 * j)) for j in range(1, 32)
)


def bernoulli(n: int) -> float:
    """Bernoulli number ``B_n`` for ``0 <= n <= 62`` (convention ``B_1 = -1/2``)."""
    if not 0 <= n <= 62:
        raise DomainError(f"Bernoulli table covers n in [0, 62], got {n}")
    if n == 1:
        return -0.5
    return float(_BERNOULLI[n])


def _exprel_neg(y: float) -> float:
    """(1 - exp(-y)) / y, continuous at y = 0."""
    if y == 0.0:
        return 1.0
    return -math.expm1(-y) / y


def _euler_maclaurin(
    term: Callable[[float, float], float],
    integral: Callable[[float], float],
    s: float,
    x: float,
    n: int,
    m: int,
) -> tuple[float, float]:
    """Sum ``term(k + s, x)`` for k >= 0 with the tail from k = n replaced by EM.

    ``term(w, p)`` must be completely monotone in ``w`` with the p-th power
    structure of ``w**-p``; derivatives are then ``(x)_j * term(w, x + j)``.
    Returns (value, error_bound).
    """
    direct = [term(k + s, x) for k in range(n)]
    w = n + s
    tail_int = integral(w)
    half = 0.5 * term(w, x)
    corrections = []
    poch = x  # rising factorial (x)_{2j-1}
    for j in range(1, m + 1):
        corrections.append(_EM_COEF[j] * poch * term(w, x + 2 * j - 1))
        poch *= (x + 2 * j - 1) * (x + 2 * j)
    remainder = abs(_EM_COEF[m + 1] * poch * term(w, x + 2 * m + 1))
    parts = direct + [tail_int, half] + corrections
    value = math.fsum(parts)
    scale = math.fsum(abs(p) for p in parts)
    return value, remainder + 4 * _EPS * scale


def _split_point(x: float, s: float) -> int:
    return max(math.ceil(10 + abs(x)), math.ceil(10 - s), 1)


def _run_em(term, integral, s, x, cfg: EvalConfig) -> SeriesValue:
    n = min(_split_point(x, s), cfg.max_terms)
    m = cfg.em_bernoulli_terms
    while True:
        value, bound = _euler_maclaurin(term, integral, s, x, n, m)
        if not (math.isfinite(value) and math.isfinite(bound)):
            raise OverflowError(f"series value not representable (x={x}, s={s})")
        if abs(value) < sys.float_info.min:
            # result in the subnormal range: no relative accuracy is possible
            return SeriesValue(value, bound + sys.float_info.min, n)
        if bound <= cfg.rel_tol * abs(value):
            return SeriesValue(value, bound, n)
        if n >= cfg.max_terms:
            raise ConvergenceError(
                f"rel_tol={cfg.rel_tol} not reached with {n} terms (bound {bound:.3g})"
            )
        n = min(2 * n, cfg.max_terms)


def hurwitz_zeta(x: float, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> SeriesValue:
    """Hurwitz zeta ``sum_{k>=0} (k + s)**-x`` for ``x > 1``, ``s > 0``."""
    if not (x > 1 and s > 0) or not (math.isfinite(x) and math.isfinite(s)):
        raise DomainError(f"hurwitz_zeta needs x > 1 and s > 0, got x={x}, s={s}")

    def term(w, p):
        return w**-p

    def integral(w):
        return w ** (1 - x) / (x - 1)

    return _run_em(term, integral, s, x, cfg)


def hurwitz_zeta_diff(
    x: float, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> SeriesValue:
    """``zeta(x, b) - zeta(x, a + b)`` summed termwise; valid down to ``x = 1``.

    Each summand ``(k+b)**-x - (k+a+b)**-x`` is formed as
    ``(k+b)**-x * (1 - (1 + a/(k+b))**-x)`` via expm1/log1p, so small ``a``
    does not cancel.  At ``x = 1`` the tail integral is ``log1p(a / (N + b))``.
    """
    for name, v in (("x", x), ("a", a), ("b", b)):
        if not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v}")
    if not (x >= 1 and a > 0 and b > 0):
        raise DomainError(f"hurwitz_zeta_diff needs x >= 1, a > 0, b > 0; got {x}, {a}, {b}")

    def term(w, p):
        return -(w**-p) * math.expm1(-p * math.log1p(a / w))

    def integral(w):
        log_ratio = math.log1p(a / w)
        return w ** (1 - x) * log_ratio * _exprel_neg((x - 1) * log_ratio)

    return _run_em(term, integral, b, x, cfg)


def euler_gamma() -> float:
    return EULER_GAMMA


# Asymptotic digamma: psi(s) ~ ln s - 1/(2s) - sum_k B_2k / (2k s^2k)
_DIGAMMA_COEF = tuple(float(_BERNOULLI[2 * k]) / (2 * k) for k in range(1, 10))
_DIGAMMA_SHIFT = 10.0


def digamma(s: float) -> float:
    """Digamma function for ``s > 0`` (upward recurrence, then asymptotic series)."""
    if not s > 0 or not math.isfinite(s):
        raise DomainError(f"digamma needs s > 0, got {s}")
    shift = []
    while s < _DIGAMMA_SHIFT:
        shift.append(1.0 / s)
        s += 1.0
    inv2 = 1.0 / (s * s)
    series = 0.0
    for c in reversed(_DIGAMMA_COEF):
        series = (series + c) * inv2
    return math.fsum([math.log(s), -0.5 / s, -series] + [-t for t in shift])


def polygamma(m: int, s: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Polygamma of order ``m >= 1``: ``(-1)**(m+1) m! zeta(m+1, s)``.

    Orders above 64 are refused; use ``digamma`` for ``m = 0``.
    """
    if int(m) != m or m < 1:
        raise DomainError(f"polygamma order must be an integer >= 1, got {m!r}")
    if m > MAX_POLYGAMMA_ORDER:
        raise DomainError(f"polygamma order capped at {MAX_POLYGAMMA_ORDER}, got {m}")
    if not s > 0:
        raise DomainError(f"polygamma needs s > 0, got {s}")
    z = hurwitz_zeta(m + 1, s, cfg).value
    value = float(math.factorial(m)) * z
    if not math.isfinite(value):
        raise OverflowError(f"polygamma({m}, {s}) exceeds double range")
    return value if m % 2 == 1 else -value


def log_gamma(s: float) -> float:
    """ln Gamma(s) for ``s > 0``."""
    if not s > 0 or not math.isfinite(s):
        raise DomainError(f"log_gamma needs s > 0, got {s}")
    return math.lgamma(s)
