"""Oracles and property scanners producing machine-readable report records.

Nothing here performs I/O; ``run_suite`` returns a list of ``CheckReport``
records in a deterministic order, and the CLI serialises them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

import numpy as np

from . import beta_exponential as be
from .special_functions import DEFAULT_CONFIG, DomainError, EvalConfig
from .zeta_monotonicity import (
    Case,
    Direction,
    SequencePair,
    classify_direction,
    f,
    lemma_sequence_u,
    polygamma_chain,
)

__all__ = [
    "CheckReport",
    "IntervalValue",
    "MonotonicityReport",
    "STANDARD_GRID",
    "SUITES",
    "StandardGrid",
    "Thresholds",
    "brute_force_zeta",
    "check_chain",
    "check_corollary1",
    "check_dispersion",
    "check_exponential_ks",
    "check_lemma_cases",
    "check_moments",
    "check_shape_and_hazard",
    "k_statistics",
    "run_suite",
    "scan_f_monotonicity",
]

_EPS = 2.0**-52
# asymptotic 1% critical value of sqrt(n) * D_n (Kolmogorov distribution)
KS_CRITICAL_1PCT = 1.6276236115189


@dataclass(frozen=True)
class StandardGrid:
    a_values: tuple[float, ...] = (0.1, 0.25, 0.5, 0.75, 0.9, 1.0, 1.5, 2.0, 5.0, 10.0)
    b_values: tuple[float, ...] = (0.5, 1.0, 2.0, 10.0)
    x_tenths: tuple[int, int] = (10, 200)  # x from 1.0 to 20.0 in steps of 0.1
    hazard_x: tuple[int, int] = (1, 200)  # x from 0.05 to 10 in steps of 0.05
    sampler_params: tuple[tuple[float, float], ...] = ((0.5, 1.0), (1.0, 2.0), (2.0, 3.0))
    n_samples: int = 10**6
    lemma_trials: int = 100
    lemma_max_len: int = 50
    chain_n_max: int = 10
    second_difference_h: float = 1e-3

    @property
    def x_grid(self) -> list[float]:
        lo, hi = self.x_tenths
        return [k / 10 for k in range(lo, hi + 1)]

    @property
    def hazard_grid(self) -> list[float]:
        lo, hi = self.hazard_x
        return [k / 20 for k in range(lo, hi + 1)]

    def ab_pairs(self) -> list[tuple[float, float]]:
        return [(a, b) for a in self.a_values for b in self.b_values]


@dataclass(frozen=True)
class Thresholds:
    margin: float = 1e-10
    constant_rel_tol: float = 1e-12
    mc_sigmas: float = 5.0
    flat_second_difference: float = 1e-9
    hazard_abs_tol: float = 1e-10


STANDARD_GRID = StandardGrid()
DEFAULT_THRESHOLDS = Thresholds()


@dataclass(frozen=True)
class IntervalValue:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def __contains__(self, v: float) -> bool:
        return self.lo <= v <= self.hi


@dataclass
class CheckReport:
    check: str
    params: dict[str, Any]
    passed: bool
    margin: float | None
    detail: Any = ""

    def to_json(self) -> dict[str, Any]:
        margin = self.margin
        if margin is not None and not math.isfinite(margin):
            margin = None
        return {
            "check": self.check,
            "params": self.params,
            "pass": bool(self.passed),
            "margin": margin,
            "detail": self.detail,
        }


@dataclass
class MonotonicityReport:
    """Claimed vs observed direction over a grid.

    For monotone claims ``min_margin`` is the smallest signed consecutive
    difference (positive means the claim held with that much room); for a
    Constant claim it is the largest relative deviation from the constant.
    """

    claimed: Direction
    observed: Direction | None
    grid: list[tuple[float, float]]
    min_margin: float
    passed: bool
    detail: str = ""

    def to_record(self, check: str, params: dict[str, Any]) -> CheckReport:
        detail = {
            "claimed": self.claimed.value,
            "observed": self.observed.value if self.observed else None,
            "points": len(self.grid),
        }
        if self.detail:
            detail["note"] = self.detail
        return CheckReport(check, params, self.passed, self.min_margin, detail)


# -- oracles ----------------------------------------------------------------------


def brute_force_zeta(x: float, s: float, n_terms: int) -> IntervalValue:
    """Enclosure of zeta(x, s) from the first ``n_terms`` terms.

    With P the partial sum over k < n, the tail over k >= n lies between the
    integrals of (t + s)^-x from n and from n - 1.  Both ends are widened by a
    rounding allowance for the partial sum.
    """
    if not (x > 1 and s > 0):
        raise DomainError(f"need x > 1 and s > 0, got {x}, {s}")
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    chunks = []
    for start in range(0, n_terms, 1 << 20):
        k = np.arange(start, min(start + (1 << 20), n_terms), dtype=float)
        chunks.append(math.fsum((k + s) ** -x))
    partial = math.fsum(chunks)
    pad = 4 * _EPS * partial
    tail_lo = (n_terms + s) ** (1 - x) / (x - 1)
    tail_hi = (n_terms - 1 + s) ** (1 - x) / (x - 1)
    return IntervalValue(partial + tail_lo - pad, partial + tail_hi + pad)


def _observe(values: Sequence[float], const: float, rel_tol: float) -> Direction | None:
    diffs = np.diff(values)
    if np.all(np.abs(np.asarray(values) - const) <= rel_tol * abs(const)):
        return Direction.CONSTANT
    if np.all(diffs > 0):
        return Direction.INCREASING
    if np.all(diffs < 0):
        return Direction.DECREASING
    return None


def _monotonicity_report(
    claimed: Direction,
    grid: list[tuple[float, float]],
    const: float,
    margin: float,
    rel_tol: float,
    extra_ok: bool = True,
    note: str = "",
) -> MonotonicityReport:
    values = [v for _, v in grid]
    observed = _observe(values, const, rel_tol)
    if claimed is Direction.CONSTANT:
        worst = max(abs(v - const) / abs(const) for v in values)
        passed = worst <= rel_tol
        min_margin = worst
    else:
        sign = 1.0 if claimed is Direction.INCREASING else -1.0
        min_margin = float(np.min(sign * np.diff(values))) if len(values) > 1 else math.inf
        passed = observed is claimed and min_margin > margin
    return MonotonicityReport(claimed, observed, grid, min_margin, passed and extra_ok, note)


def scan_f_monotonicity(
    a: float,
    b: float,
    x_grid: Sequence[float],
    margin: float = DEFAULT_THRESHOLDS.margin,
    constant_rel_tol: float = DEFAULT_THRESHOLDS.constant_rel_tol,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> MonotonicityReport:
    """Scan x -> f(x, a, b) on an ascending grid and compare with the prediction."""
    claimed = classify_direction(a)
    if any(x2 <= x1 for x1, x2 in zip(x_grid, x_grid[1:])) or min(x_grid) < 1:
        raise DomainError("x_grid must be ascending with all points >= 1")
    try:
        grid = [(x, f(x, a, b, cfg)) for x in x_grid]
    except (ArithmeticError, ValueError) as exc:
        return MonotonicityReport(claimed, None, [], -math.inf, False, f"evaluation failed: {exc}")
    return _monotonicity_report(claimed, grid, 1.0 / b, margin, constant_rel_tol)


def check_chain(
    a: float,
    b: float,
    n_max: int,
    constant_rel_tol: float = DEFAULT_THRESHOLDS.constant_rel_tol,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> MonotonicityReport:
    """Strict ordering of the polygamma chain and its bound 1/b."""
    if n_max > 20:
        raise DomainError(f"check_chain supports n_max <= 20, got {n_max}")
    claimed = classify_direction(a)
    try:
        chain = polygamma_chain(n_max, a, b, cfg)
    except (ArithmeticError, ValueError) as exc:
        return MonotonicityReport(claimed, None, [], -math.inf, False, f"evaluation failed: {exc}")
    grid = list(enumerate(chain))
    limit = 1.0 / b
    bounded = True
    note = ""
    if claimed is Direction.INCREASING:
        bounded = all(v < limit for v in chain)
    elif claimed is Direction.DECREASING:
        bounded = all(v > limit for v in chain)
    if not bounded:
        note = "chain crosses 1/b"
    return _monotonicity_report(claimed, grid, limit, 0.0, constant_rel_tol, bounded, note)


# -- the auxiliary sequence --------------------------------------------------------


def _open_uniform(rng: np.random.Generator, size: int) -> np.ndarray:
    u = rng.random(size)
    while np.any(u == 0):
        u[u == 0] = rng.random(int(np.sum(u == 0)))
    return u


def _case1_pair(rng: np.random.Generator, n: int) -> SequencePair:
    s = _open_uniform(rng, n)
    r = s * _open_uniform(rng, n)
    tie = rng.random(n) < 0.1
    r[tie] = s[tie]
    return SequencePair(tuple(s), tuple(r))


def _case2_pair(rng: np.random.Generator, n: int) -> SequencePair:
    chain = np.sort(_open_uniform(rng, 2 * n))[::-1]  # r_1 > s_1 > r_2 > s_2 > ...
    r = chain[0::2].copy()
    s = chain[1::2].copy()
    tie = rng.random(n) < 0.1
    s[tie] = r[tie]
    return SequencePair(tuple(s), tuple(r))


def _lemma_violations(pair: SequencePair, expected: Case) -> list[str]:
    u = lemma_sequence_u(pair)
    sign = 1.0 if expected is Case.CASE1 else -1.0
    issues = []
    if pair.case_label is not expected and pair.case_label is not Case.CASE1:
        issues.append(f"pair classified as {pair.case_label.value}")
    for n in range(len(pair)):
        step = u[n + 1] - u[n]
        if pair.s_seq[n] == pair.r_seq[n]:
            if step != 0.0:
                issues.append(f"u changed by {step!r} at N={n} although s = r")
        elif not sign * step > 0:
            issues.append(f"u step {step!r} at N={n} has the wrong sign")
        if not sign * u[n + 1] >= 0:
            issues.append(f"u_{n + 1} = {u[n + 1]!r} has the wrong sign")
    return issues


def check_lemma_cases(trials: int, max_len: int, seed: int) -> list[CheckReport]:
    """Randomised Case1 / Case2 pairs plus an equal-sequence control.

    Returns one record per case family and one for the control.
    """
    if trials < 1 or max_len < 1:
        raise DomainError("trials and max_len must be >= 1")
    rng = np.random.Generator(np.random.Philox(seed))
    reports = []
    for expected, draw in ((Case.CASE1, _case1_pair), (Case.CASE2, _case2_pair)):
        failures = []
        min_step = math.inf
        for _ in range(trials):
            n = int(rng.integers(1, max_len + 1))
            pair = draw(rng, n)
            issues = _lemma_violations(pair, expected)
            u = lemma_sequence_u(pair)
            sign = 1.0 if expected is Case.CASE1 else -1.0
            steps = [sign * (u[i + 1] - u[i]) for i in range(n) if pair.s_seq[i] != pair.r_seq[i]]
            if steps:
                min_step = min(min_step, min(steps))
            if issues:
                failures.append({"s": list(pair.s_seq), "r": list(pair.r_seq), "issues": issues})
        detail: dict[str, Any] = {"trials": trials, "violations": len(failures)}
        if failures:
            detail["first_failure"] = failures[0]
        reports.append(
            CheckReport(f"lemma_{expected.value.lower()}", {"trials": trials, "max_len": max_len, "seed": seed},
                        not failures, min_step, detail)
        )
    control = SequencePair((0.5, 0.25, 0.125), (0.5, 0.25, 0.125))
    u = lemma_sequence_u(control)
    worst = max(abs(v) for v in u)
    reports.append(CheckReport("lemma_control", {"s": list(control.s_seq)}, worst <= 1e-15, worst,
                               {"u": u}))
    return reports


# -- the distribution --------------------------------------------------------------


def k_statistics(xs: np.ndarray) -> tuple[float, float, float]:
    """Unbiased estimators k_1, k_2, k_3 of the first three cumulants."""
    n = xs.size
    mean = float(np.mean(xs))
    c = xs - mean
    m2 = float(np.mean(c * c))
    m3 = float(np.mean(c * c * c))
    k2 = n / (n - 1) * m2
    k3 = n * n / ((n - 1) * (n - 2)) * m3
    return mean, k2, k3


def _k_stat_standard_errors(kap: Sequence[float], n: int) -> tuple[float, float, float]:
    k1, k2, k3, k4, _, k6 = kap
    var1 = k2 / n
    var2 = k4 / n + 2 * k2**2 / (n - 1)
    var3 = k6 / n + 9 * k2 * k4 / (n - 1) + 9 * k3**2 / (n - 1) + 6 * n * k2**3 / ((n - 1) * (n - 2))
    return math.sqrt(var1), math.sqrt(var2), math.sqrt(var3)


def check_moments(p: be.BEParams, n_samples: int, seed: int, sigmas: float = DEFAULT_THRESHOLDS.mc_sigmas) -> CheckReport:
    """Sample k-statistics against the analytic cumulants.

    Standard errors come from the exact sampling variances of k_1..k_3,
    evaluated at the analytic cumulants up to order six.
    """
    if n_samples < 10**4:
        raise DomainError("n_samples must be >= 10^4")
    params = {"a": p.a, "b": p.b, "n_samples": n_samples, "seed": seed}
    try:
        kap = [be.cumulant(n, p) for n in range(1, 7)]
        xs = be.sample(p, seed, n_samples)
        ks = k_statistics(xs)
        ses = _k_stat_standard_errors(kap, n_samples)
    except (ArithmeticError, ValueError) as exc:
        return CheckReport("moments", params, False, None, f"evaluation failed: {exc}")
    z = [(k - kp) / se for k, kp, se in zip(ks, kap, ses)]
    worst = max(abs(v) for v in z)
    observed = "over" if ks[1] > ks[0] ** 2 else "under" if ks[1] < ks[0] ** 2 else "equi"
    detail = {"k": list(ks), "kappa": kap[:3], "z": z, "observed_dispersion": observed}
    return CheckReport("moments", params, worst <= sigmas, sigmas - worst, detail)


def check_exponential_ks(b: float, n_samples: int, seed: int) -> CheckReport:
    """Kolmogorov-Smirnov distance of BE(1, b) samples from Exp(b)."""
    xs = np.sort(be.sample(be.BEParams(1.0, b), seed, n_samples))
    cdf = -np.expm1(-b * xs)
    i = np.arange(1, n_samples + 1)
    d = max(float(np.max(i / n_samples - cdf)), float(np.max(cdf - (i - 1) / n_samples)))
    critical = KS_CRITICAL_1PCT / math.sqrt(n_samples)
    params = {"a": 1.0, "b": b, "n_samples": n_samples, "seed": seed}
    return CheckReport("ks_exponential", params, d < critical, critical - d,
                       {"statistic": d, "critical_1pct": critical})


def check_dispersion(p: be.BEParams) -> CheckReport:
    params = {"a": p.a, "b": p.b}
    try:
        cls = be.dispersion_class(p)
        gap = math.sqrt(be.cumulant(2, p)) - be.cumulant(1, p)
    except (ArithmeticError, ValueError) as exc:
        return CheckReport("dispersion", params, False, None, f"evaluation failed: {exc}")
    expected = {Direction.INCREASING: be.DispersionClass.OVER,
                Direction.DECREASING: be.DispersionClass.UNDER,
                Direction.CONSTANT: be.DispersionClass.EQUI}[classify_direction(p.a)]
    if p.a < 1:
        numeric_ok = gap > 0
    elif p.a > 1:
        numeric_ok = gap < 0
    else:
        numeric_ok = abs(gap) <= 1e-12 / p.b
    return CheckReport("dispersion", params, cls is expected and numeric_ok, gap,
                       {"class": cls.value, "expected": expected.value})


def check_shape_and_hazard(
    p: be.BEParams,
    x_grid: Sequence[float],
    h: float,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> list[CheckReport]:
    """Log-convexity/concavity of the density and monotonicity of the hazard."""
    if min(x_grid) <= h:
        raise DomainError("grid must lie inside (h, inf)")
    params = {"a": p.a, "b": p.b, "h": h, "points": len(x_grid)}
    reports = []
    try:
        second = [be.log_pdf_second_difference(x, h, p) for x in x_grid]
        haz = [be.hazard(x, p) for x in x_grid]
    except (ArithmeticError, ValueError) as exc:
        fail = f"evaluation failed: {exc}"
        return [CheckReport("log_density_shape", params, False, None, fail),
                CheckReport("hazard", params, False, None, fail)]

    if p.a < 1:
        bad = [x for x, v in zip(x_grid, second) if not v > 0]
        margin = min(second)
    elif p.a > 1:
        bad = [x for x, v in zip(x_grid, second) if not v < 0]
        margin = -max(second)
    else:
        worst = max(abs(v) for v in second)
        bad = [x for x, v in zip(x_grid, second) if abs(v) > thresholds.flat_second_difference]
        margin = thresholds.flat_second_difference - worst
    reports.append(CheckReport("log_density_shape", params, not bad, margin,
                               {"violations": len(bad), "first_bad_x": bad[0] if bad else None}))

    steps = np.diff(haz)
    if p.a < 1:
        bad = [x for x, d in zip(x_grid[1:], steps) if d > 0]
        margin = float(-np.max(steps))
    elif p.a > 1:
        bad = [x for x, d in zip(x_grid[1:], steps) if d < 0]
        margin = float(np.min(steps))
    else:
        dev = [abs(v - p.b) for v in haz]
        bad = [x for x, d in zip(x_grid, dev) if d > thresholds.hazard_abs_tol]
        margin = thresholds.hazard_abs_tol - max(dev)
    reports.append(CheckReport("hazard", params, not bad, margin,
                               {"violations": len(bad), "first_bad_x": bad[0] if bad else None}))
    return reports


def check_corollary1(p: be.BEParams, n_max: int = 10, margin: float = DEFAULT_THRESHOLDS.margin,
                     constant_rel_tol: float = DEFAULT_THRESHOLDS.constant_rel_tol,
                     cfg: EvalConfig = DEFAULT_CONFIG) -> list[CheckReport]:
    """n -> f_BE(n) ordering, and agreement of f_BE(n) with f(n, a, b)."""
    params = {"a": p.a, "b": p.b, "n_max": n_max}
    try:
        fbe = [be.f_be(n, p, cfg) for n in range(1, n_max + 1)]
        fz = [f(n, p.a, p.b, cfg) for n in range(1, n_max + 1)]
    except (ArithmeticError, ValueError) as exc:
        fail = f"evaluation failed: {exc}"
        return [CheckReport("corollary1_order", params, False, None, fail),
                CheckReport("corollary1_identity", params, False, None, fail)]
    order = _monotonicity_report(classify_direction(p.a), list(enumerate(fbe, 1)), 1.0 / p.b,
                                 margin, constant_rel_tol)
    rel = max(abs(u - v) / v for u, v in zip(fbe, fz))
    return [order.to_record("corollary1_order", params),
            CheckReport("corollary1_identity", params, rel <= 1e-11, rel, {"max_rel_diff": rel})]


# -- suites ----------------------------------------------------------------------


def _suite_theorem1(grid: StandardGrid, th: Thresholds, seed: int, cfg: EvalConfig) -> Iterable[CheckReport]:
    xs = grid.x_grid
    for a, b in grid.ab_pairs():
        rep = scan_f_monotonicity(a, b, xs, th.margin, th.constant_rel_tol, cfg)
        yield rep.to_record("theorem1", {"a": a, "b": b, "x_lo": xs[0], "x_hi": xs[-1], "x_step": 0.1})


def _suite_chains(grid: StandardGrid, th: Thresholds, seed: int, cfg: EvalConfig) -> Iterable[CheckReport]:
    for a, b in grid.ab_pairs():
        rep = check_chain(a, b, grid.chain_n_max, th.constant_rel_tol, cfg)
        yield rep.to_record("polygamma_chain", {"a": a, "b": b, "n_max": grid.chain_n_max})


def _suite_lemma(grid: StandardGrid, th: Thresholds, seed: int, cfg: EvalConfig) -> Iterable[CheckReport]:
    yield from check_lemma_cases(grid.lemma_trials, grid.lemma_max_len, seed)


def _suite_distribution(grid: StandardGrid, th: Thresholds, seed: int, cfg: EvalConfig) -> Iterable[CheckReport]:
    for a, b in grid.ab_pairs():
        p = be.BEParams(a, b)
        yield from check_corollary1(p, grid.chain_n_max, th.margin, th.constant_rel_tol, cfg)
        yield check_dispersion(p)
        yield from check_shape_and_hazard(p, grid.hazard_grid, grid.second_difference_h, th)
    for i, (a, b) in enumerate(grid.sampler_params):
        yield check_moments(be.BEParams(a, b), grid.n_samples, seed + i, th.mc_sigmas)
    for i, (a, b) in enumerate(grid.sampler_params):
        if a == 1:
            yield check_exponential_ks(b, grid.n_samples, seed + i)


SUITES = {
    "theorem1": (_suite_theorem1,),
    "chains": (_suite_chains,),
    "lemma": (_suite_lemma,),
    "distribution": (_suite_distribution,),
    "all": (_suite_theorem1, _suite_chains, _suite_lemma, _suite_distribution),
}


def run_suite(
    name: str,
    seed: int = 0,
    grid: StandardGrid = STANDARD_GRID,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
    cfg: EvalConfig = DEFAULT_CONFIG,
) -> list[CheckReport]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    out: list[CheckReport] = []
    for part in SUITES[name]:
        out.extend(part(grid, thresholds, seed, cfg))
    return out
