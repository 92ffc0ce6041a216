"""The beta-exponential distribution BE(a, b): law of -ln(1 - V), V ~ Beta(a, b).

Density ``g(x) = (1 - e^-x)^(a-1) e^(-b x) / B(a, b)`` on x > 0.  The CDF is
the regularized incomplete beta ``I_p(a, b)`` at ``p = 1 - e^-x``; since
``1 - p = e^-x`` exactly, both tails are evaluated without cancellation.
Cumulants are differences of polygamma values, ``kappa_n = (-1)^n
(psi^(n-1)(b) - psi^(n-1)(b+a))``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .special_functions import (
    DEFAULT_CONFIG,
    ConvergenceError,
    DomainError,
    EvalConfig,
    digamma,
    log_gamma,
    polygamma,
)

__all__ = [
    "BEParams",
    "CumulantTable",
    "DispersionClass",
    "cdf",
    "cgf",
    "cumulant",
    "cumulant_table",
    "dispersion_class",
    "f_be",
    "gamma_cumulant",
    "gamma_f",
    "hazard",
    "log_beta",
    "log_hazard",
    "log_pdf",
    "log_pdf_second_difference",
    "log_survival",
    "pdf",
    "sample",
    "survival",
]

MAX_CUMULANT_ORDER = 64
MAX_REJECTIONS = 10**6
_CF_MAX_ITER = 10_000
_CF_EPS = 1e-16
_FPMIN = 1e-300


@dataclass(frozen=True)
class BEParams:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"parameters must be finite, got {self}")
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"parameters must be positive, got {self}")


class DispersionClass(str, enum.Enum):
    OVER = "Over"
    UNDER = "Under"
    EQUI = "Equi"


@dataclass(frozen=True)
class CumulantTable:
    params: BEParams
    kappas: tuple[float, ...]
    f_be: tuple[float, ...]


def log_beta(a: float, b: float) -> float:
    if not (a > 0 and b > 0):
        raise DomainError(f"log_beta needs a, b > 0, got {a}, {b}")
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b)


def _log1mexp(x: float) -> float:
    """ln(1 - e^-x) for x > 0, switching formula at ln 2."""
    if x < math.log(2):
        return math.log(-math.expm1(-x))
    return math.log1p(-math.exp(-x))


def log_pdf(x: float, p: BEParams) -> float:
    if x <= 0:
        return -math.inf
    if math.isinf(x):
        return -math.inf
    return (p.a - 1) * _log1mexp(x) - p.b * x - log_beta(p.a, p.b)


def pdf(x: float, p: BEParams) -> float:
    return math.exp(log_pdf(x, p))


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction of the incomplete beta (modified Lentz)."""
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _FPMIN:
        d = _FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _CF_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _FPMIN:
            d = _FPMIN
        c = 1.0 + aa / c
        if abs(c) < _FPMIN:
            c = _FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            return h
    raise ConvergenceError(f"incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})")


def _tails(x: float, p: BEParams) -> tuple[float, float, float]:
    """(cdf, survival, log survival) at x > 0."""
    a, b = p.a, p.b
    if a == 1:
        # exponential law
        return -math.expm1(-b * x), math.exp(-b * x), -b * x
    prob = -math.expm1(-x)  # 1 - e^-x
    log_prob = _log1mexp(x)
    log_q = -x  # ln e^-x, exact
    log_front = a * log_prob + b * log_q - log_beta(a, b)
    if prob < (a + 1) / (a + b + 2):
        lower = math.exp(log_front) * _betacf(a, b, prob) / a
        lower = min(lower, 1.0)
        return lower, 1.0 - lower, math.log1p(-lower) if lower < 1 else -math.inf
    log_upper = log_front + math.log(_betacf(b, a, math.exp(-x))) - math.log(b)
    upper = math.exp(log_upper)
    return 1.0 - upper, upper, log_upper


def cdf(x: float, p: BEParams) -> float:
    if x <= 0:
        return 0.0
    if math.isinf(x):
        return 1.0
    return _tails(x, p)[0]


def survival(x: float, p: BEParams) -> float:
    if x <= 0:
        return 1.0
    if math.isinf(x):
        return 0.0
    return _tails(x, p)[1]


def log_survival(x: float, p: BEParams) -> float:
    if x <= 0:
        return 0.0
    if math.isinf(x):
        return -math.inf
    return _tails(x, p)[2]


def log_hazard(x: float, p: BEParams) -> float:
    if not x > 0:
        raise DomainError(f"hazard needs x > 0, got {x}")
    if p.a == 1:
        return math.log(p.b)  # memoryless
    a, b = p.a, p.b
    if -math.expm1(-x) >= (a + 1) / (a + b + 2) and math.isfinite(x):
        # upper-tail branch: the common factors of pdf and survival cancel
        return math.log(b) - _log1mexp(x) - math.log(_betacf(b, a, math.exp(-x)))
    log_sf = log_survival(x, p)
    if math.isinf(log_sf):
        raise OverflowError(f"survival function underflows at x={x}")
    return log_pdf(x, p) - log_sf


def hazard(x: float, p: BEParams) -> float:
    """g(x) / (1 - F(x)), formed in log space so deep tails do not underflow."""
    if p.a == 1 and x > 0:
        return p.b
    return math.exp(log_hazard(x, p))


def cgf(t: float, p: BEParams) -> float:
    """Cumulant-generating function K(t) = ln E exp(tX), defined for t < b."""
    if not t < p.b:
        raise DomainError(f"cgf needs t < b = {p.b}, got {t}")
    a, b = p.a, p.b
    return (log_gamma(b - t) - log_gamma(b)) - (log_gamma(a + b - t) - log_gamma(a + b))


def cumulant(n: int, p: BEParams, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    if int(n) != n or not 1 <= n <= MAX_CUMULANT_ORDER:
        raise DomainError(f"cumulant order must be an integer in [1, {MAX_CUMULANT_ORDER}], got {n!r}")
    if n == 1:
        return digamma(p.b + p.a) - digamma(p.b)
    value = polygamma(n - 1, p.b, cfg) - polygamma(n - 1, p.b + p.a, cfg)
    return value if n % 2 == 0 else -value


def f_be(n: int, p: BEParams, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """(kappa_n / (n-1)!)**(1/n)."""
    kappa = cumulant(n, p, cfg)
    if not kappa > 0:
        raise ArithmeticError(f"cumulant {n} of {p} is not positive: {kappa}")
    return (kappa / math.factorial(n - 1)) ** (1.0 / n)


def cumulant_table(n: int, p: BEParams, cfg: EvalConfig = DEFAULT_CONFIG) -> CumulantTable:
    kappas = tuple(cumulant(k, p, cfg) for k in range(1, n + 1))
    roots = tuple((kp / math.factorial(k - 1)) ** (1.0 / k) for k, kp in enumerate(kappas, 1))
    return CumulantTable(p, kappas, roots)


def dispersion_class(p: BEParams) -> DispersionClass:
    """Compare the standard deviation with the mean.

    a = 1 is reported as Equi; otherwise the class comes from the computed
    cumulants, which callers may check against the a-vs-1 rule.
    """
    if p.a == 1:
        return DispersionClass.EQUI
    sd = math.sqrt(cumulant(2, p))
    mean = cumulant(1, p)
    if sd > mean:
        return DispersionClass.OVER
    if sd < mean:
        return DispersionClass.UNDER
    return DispersionClass.EQUI


def sample(p: BEParams, seed: int, count: int) -> np.ndarray:
    """Draw ``count`` BE(a, b) variates from a Philox stream keyed by ``seed``.

    V = G_a / (G_a + G_b) with independent standard gammas, so
    -ln(1 - V) = ln(1 + G_a / G_b), formed from the logs of the gammas so the
    ratio cannot overflow.  Draws whose result is not a positive finite
    double (a gamma or the result underflowing to zero) are redrawn, at most
    MAX_REJECTIONS rounds.
    """
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    rng = np.random.Generator(np.random.Philox(seed))
    out = np.empty(count)
    bad = np.ones(count, dtype=bool)
    rounds = 0
    with np.errstate(divide="ignore"):
        while bad.any():
            if rounds > MAX_REJECTIONS:
                raise ConvergenceError("beta-exponential draws kept underflowing to zero")
            rounds += 1
            k = int(bad.sum())
            g_a = rng.standard_gamma(p.a, k)
            g_b = rng.standard_gamma(p.b, k)
            out[bad] = np.logaddexp(0.0, np.log(g_a) - np.log(g_b))
            bad = ~(np.isfinite(out) & (out > 0))
    return out


def log_pdf_second_difference(x: float, h: float, p: BEParams) -> float:
    """log g(x+h) - 2 log g(x) + log g(x-h).

    Grouped by term: the constant -ln B cancels exactly, and the linear part
    -b x contributes only its (round-off level) second difference.
    """
    if not (h > 0 and x - h > 0):
        raise DomainError(f"need h > 0 and x - h > 0, got x={x}, h={h}")
    curve = _log1mexp(x + h) - 2 * _log1mexp(x) + _log1mexp(x - h)
    linear = (x + h) - 2 * x + (x - h)
    return (p.a - 1) * curve - p.b * linear


def gamma_cumulant(n: int, a: float, b: float) -> float:
    """n-th cumulant a (n-1)! / b^n of the gamma law with shape a, rate b."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n!r}")
    if not (a > 0 and b > 0):
        raise DomainError(f"need a, b > 0, got {a}, {b}")
    try:
        value = a * math.factorial(n - 1) / b**n
    except (OverflowError, ZeroDivisionError):
        value = math.exp(min(math.log(a) + math.lgamma(n) - n * math.log(b), 710.0))
    if not math.isfinite(value):
        raise OverflowError(f"gamma cumulant {n} exceeds double range")
    return value


def gamma_f(n: int, a: float, b: float) -> float:
    """(kappa_n / (n-1)!)**(1/n) = a**(1/n) / b for the gamma law."""
    if int(n) != n or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n!r}")
    if not (a > 0 and b > 0):
        raise DomainError(f"need a, b > 0, got {a}, {b}")
    return a ** (1.0 / n) / b
