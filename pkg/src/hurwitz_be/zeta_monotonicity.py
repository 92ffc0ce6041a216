"""The function f(x, a, b) = (zeta(x, b) - zeta(x, a + b))**(1/x) and its tools.

f is increasing in x for 0 < a < 1, decreasing for a > 1 and identically
1/b for a = 1.  This module evaluates f and log f, resolves the sign of the
log-derivative through the shifted series H, evaluates the auxiliary
sequence u_N used to control that sign, and builds the polygamma chains
((psi^(n)(b+a) - psi^(n)(b)) / n!)**(1/(n+1)) that coincide with f(n+1, a, b).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .special_functions import (
    DEFAULT_CONFIG,
    ConvergenceError,
    DomainError,
    EvalConfig,
    digamma,
    hurwitz_zeta_diff,
    polygamma,
)

__all__ = [
    "Case",
    "Direction",
    "FArgs",
    "SequencePair",
    "Sign",
    "classify_direction",
    "f",
    "h_sign",
    "h_value",
    "lemma_sequence_u",
    "log_f",
    "polygamma_chain",
]

MAX_CHAIN_ORDER = 63
_EPS = 2.0**-52


class Direction(str, enum.Enum):
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    CONSTANT = "Constant"


class Sign(str, enum.Enum):
    NEGATIVE = "Negative"
    ZERO = "Zero"
    POSITIVE = "Positive"


class Case(str, enum.Enum):
    CASE1 = "Case1"
    CASE2 = "Case2"
    NEITHER = "Neither"


@dataclass(frozen=True)
class FArgs:
    x: float
    a: float
    b: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x, self.a, self.b)):
            raise DomainError(f"non-finite argument in {self}")
        if not (self.x >= 1 and self.a > 0 and self.b > 0):
            raise DomainError(f"need x >= 1, a > 0, b > 0; got {self}")


def f(x: float, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    FArgs(x, a, b)
    return hurwitz_zeta_diff(x, a, b, cfg).value ** (1.0 / x)


def log_f(x: float, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """ln f(x, a, b), defined here only for x > 1."""
    FArgs(x, a, b)
    if not x > 1:
        raise DomainError(f"log_f needs x > 1, got {x}")
    return math.log(hurwitz_zeta_diff(x, a, b, cfg).value) / x


def classify_direction(a: float) -> Direction:
    """Predicted direction of x -> f(x, a, b); exact comparison with 1."""
    if not a > 0:
        raise DomainError(f"a must be positive, got {a}")
    if a < 1:
        return Direction.INCREASING
    if a > 1:
        return Direction.DECREASING
    return Direction.CONSTANT


# -- sign of the log-derivative -------------------------------------------------


def _power_tail(u: float, b: float, x: float) -> float:
    # b**x * integral_u^inf t^-x dt
    return u * (b / u) ** x / (x - 1)


def _plogp_tail(u: float, b: float, x: float) -> float:
    # b**x * integral_u^inf t^-x ln(t/b) dt
    return u * (b / u) ** x * (math.log(u / b) / (x - 1) + 1.0 / (x - 1) ** 2)


_CHUNK = 1 << 18


def _h_partial(x: float, a: float, b: float, n: int) -> tuple[float, float]:
    """Enclosure [lo, hi] of H using n explicit terms and integral tail bounds."""
    c = a - 1 + b
    a_parts, s_parts, scale = [], [], 0.0
    for start in range(1, n + 1, _CHUNK):
        k = np.arange(start, min(start + _CHUNK, n + 1), dtype=float)
        log_s = -x * np.log1p(k / b)
        log_r = -x * np.log((k + c) / b)
        s = np.exp(log_s)
        r = np.exp(log_r)
        a_parts.append(math.fsum(s * log_s - r * log_r))
        s_parts.append(math.fsum(s - r))
        scale += float(np.sum(s * np.abs(log_s)) + np.sum(r * np.abs(log_r)))
        scale += float(np.sum(s) + np.sum(r))
    a_sum = math.fsum(a_parts)
    s_sum = math.fsum(s_parts)

    # Tails over k > n of sum (s - r) and sum (s ln s - r ln r).  Both summands
    # keep one sign and decrease in k once k + min(b, c) is past the threshold
    # of _h_start, so each tail lies between 0 and its integral from n.
    u_s, u_r = n + b, n + c
    tail_d = _power_tail(u_s, b, x) - _power_tail(u_r, b, x)
    tail_p = -x * (_plogp_tail(u_s, b, x) - _plogp_tail(u_r, b, x))
    u_min = min(u_s, u_r)
    pad_t = 8 * _EPS * (_power_tail(u_min, b, x) + x * _plogp_tail(u_min, b, x))

    a_lo = a_sum + min(0.0, tail_p) - pad_t
    a_hi = a_sum + max(0.0, tail_p) + pad_t
    s_lo = s_sum + min(0.0, tail_d) - pad_t
    s_hi = s_sum + max(0.0, tail_d) + pad_t

    def phi(v):
        return (1 + v) * math.log1p(v)

    # (1 + v) ln(1 + v) is minimised at 1 + v = 1/e
    phi_vals = [phi(s_lo), phi(s_hi)]
    phi_max = max(phi_vals)
    phi_min = -1 / math.e if s_lo < 1 / math.e - 1 < s_hi else min(phi_vals)
    slope = abs(math.log1p(s_sum)) + 1
    rounding = (math.log2(n) + 16) * _EPS * (scale * (1 + slope) + abs(phi(s_sum)))
    return a_lo - phi_max - rounding, a_hi - phi_min + rounding


def _h_start(x: float, a: float, b: float) -> int:
    c = a - 1 + b
    # summands monotone once ln((k + min(b, c)) / b) > (2x + 1) / (x (x + 1))
    threshold = b * math.exp((2 * x + 1) / (x * (x + 1))) - min(b, c)
    return max(256, math.ceil(threshold) + 1)


def h_value(x: float, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Rigorous-up-to-rounding enclosure (lo, hi) of H(x, a, b), refined until
    it excludes zero or ``cfg.max_terms`` is reached."""
    FArgs(x, a, b)
    if not x > 1:
        raise DomainError(f"H is analysed for x > 1 only, got {x}")
    n = min(_h_start(x, a, b), cfg.max_terms)
    while True:
        lo, hi = _h_partial(x, a, b, n)
        if lo > 0 or hi < 0 or n >= cfg.max_terms:
            return lo, hi
        n = min(4 * n, cfg.max_terms)


def h_sign(x: float, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG) -> Sign:
    """Sign of H(x, a, b), hence of d/dx ln f(x, a, b).

    For a = 1 the shifted sequences coincide termwise and H vanishes
    identically.  Otherwise a sign is reported only when the enclosure of H
    excludes zero; an unresolved sign raises ConvergenceError.
    """
    FArgs(x, a, b)
    if not x > 1:
        raise DomainError(f"h_sign needs x > 1, got {x}")
    if a == 1:
        return Sign.ZERO
    lo, hi = h_value(x, a, b, cfg)
    if lo > 0:
        return Sign.POSITIVE
    if hi < 0:
        return Sign.NEGATIVE
    raise ConvergenceError(
        f"sign of H({x}, {a}, {b}) unresolved: enclosure [{lo:.3g}, {hi:.3g}]"
    )


# -- the auxiliary sequence u_N --------------------------------------------------


def _classify_pair(s: Sequence[float], r: Sequence[float]) -> Case:
    if all(rn <= sn for sn, rn in zip(s, r)):
        return Case.CASE1
    interleaved = all(s[i] <= r[i] for i in range(len(s))) and all(
        r[i + 1] <= s[i] for i in range(len(s) - 1)
    )
    return Case.CASE2 if interleaved else Case.NEITHER


@dataclass(frozen=True)
class SequencePair:
    """Two finite sequences in (0, 1) and the case they fall in.

    Case1: r_n <= s_n for all n.  Case2: s_{n+1} <= r_{n+1} <= s_n <= r_n.
    Sequences that are equal termwise satisfy both; Case1 is reported.
    """

    s_seq: tuple[float, ...]
    r_seq: tuple[float, ...]
    case_label: Case = field(init=False)

    def __post_init__(self):
        s = tuple(float(v) for v in self.s_seq)
        r = tuple(float(v) for v in self.r_seq)
        if len(s) != len(r):
            raise DomainError("s_seq and r_seq must have the same length")
        for v in s + r:
            if not 0 < v < 1:
                raise DomainError(f"sequence entries must lie in (0, 1), got {v}")
        object.__setattr__(self, "s_seq", s)
        object.__setattr__(self, "r_seq", r)
        object.__setattr__(self, "case_label", _classify_pair(s, r))

    def __len__(self) -> int:
        return len(self.s_seq)


def lemma_sequence_u(pair: SequencePair) -> list[float]:
    """u_0 = 0 and u_N = (1 + D_N) ln(1 + D_N) - P_N for N = 1..len(pair),

    with D_N = sum_{n<=N} (s_n - r_n) and P_N = sum_{n<=N} (s_n ln s_n - r_n ln r_n).
    """
    d = 0.0
    p = 0.0
    out = [0.0]
    for s, r in zip(pair.s_seq, pair.r_seq):
        gap = s - r
        d += gap
        # s ln s - r ln r without cancellation when s is close to r
        p += gap * math.log(s) + r * math.log1p(gap / r)
        if not 1 + d > 0:
            raise DomainError(f"1 + sum(s - r) = {1 + d} is not positive")
        out.append((1 + d) * math.log1p(d) - p)
    return out


# -- polygamma chains ------------------------------------------------------------


def polygamma_chain(
    n_max: int, a: float, b: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> list[float]:
    """Elements n = 0..n_max of ((-1)^n (psi^(n)(b+a) - psi^(n)(b)) / n!)**(1/(n+1)).

    The (-1)^n makes every base positive (odd-order polygammas decrease).
    Each element equals f(n + 1, a, b).
    """
    if int(n_max) != n_max or n_max < 0:
        raise DomainError(f"n_max must be a non-negative integer, got {n_max!r}")
    if n_max > MAX_CHAIN_ORDER:
        raise OverflowError(f"n_max capped at {MAX_CHAIN_ORDER}, got {n_max}")
    if not (a > 0 and b > 0):
        raise DomainError(f"need a > 0 and b > 0, got {a}, {b}")
    out = [digamma(b + a) - digamma(b)]
    for n in range(1, n_max + 1):
        diff = polygamma(n, b + a, cfg) - polygamma(n, b, cfg)
        base = (-1) ** n * diff / math.factorial(n)
        out.append(base ** (1.0 / (n + 1)))
    return out
