"""Command-line front end: ``eval``, ``figure`` and ``verify``.

Exit codes: 0 success, 1 verification failure, 2 bad arguments,
3 numerical failure, 4 unwritable output path.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from . import beta_exponential as be
from .special_functions import (
    DEFAULT_CONFIG,
    DomainError,
    EvalConfig,
    digamma,
    hurwitz_zeta,
    hurwitz_zeta_diff,
    polygamma,
)
from .verification import DEFAULT_THRESHOLDS, SUITES, run_suite
from .zeta_monotonicity import f

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


# -- eval -----------------------------------------------------------------------

_FUNCTIONS: dict[str, tuple[tuple[str, ...], Callable[..., float]]] = {
    "zeta": (("x", "s"), lambda cfg, x, s: hurwitz_zeta(x, s, cfg).value),
    "zeta-diff": (("x", "a", "b"), lambda cfg, x, a, b: hurwitz_zeta_diff(x, a, b, cfg).value),
    "digamma": (("s",), lambda cfg, s: digamma(s)),
    "polygamma": (("m", "s"), lambda cfg, m, s: polygamma(_as_int(m, "m"), s, cfg)),
    "f": (("x", "a", "b"), lambda cfg, x, a, b: f(x, a, b, cfg)),
    "cumulant": (("n", "a", "b"), lambda cfg, n, a, b: be.cumulant(_as_int(n, "n"), be.BEParams(a, b), cfg)),
    "f-be": (("n", "a", "b"), lambda cfg, n, a, b: be.f_be(_as_int(n, "n"), be.BEParams(a, b), cfg)),
    "pdf": (("x", "a", "b"), lambda cfg, x, a, b: be.pdf(x, be.BEParams(a, b))),
    "cdf": (("x", "a", "b"), lambda cfg, x, a, b: be.cdf(x, be.BEParams(a, b))),
    "hazard": (("x", "a", "b"), lambda cfg, x, a, b: be.hazard(x, be.BEParams(a, b))),
    "cgf": (("t", "a", "b"), lambda cfg, t, a, b: be.cgf(t, be.BEParams(a, b))),
}


def _as_int(v: float, name: str) -> int:
    if v != int(v):
        raise UsageError(f"{name} must be an integer, got {v!r}")
    return int(v)


def _parse_assignments(items: Sequence[str], required: tuple[str, ...]) -> dict[str, float]:
    out = {}
    for item in items:
        key, sep, raw = item.partition("=")
        if not sep:
            raise UsageError(f"expected key=value, got {item!r}")
        if key not in required:
            raise UsageError(f"unexpected argument {key!r}; expected {', '.join(required)}")
        try:
            out[key] = float(raw)
        except ValueError:
            raise UsageError(f"{key}={raw!r} is not a number") from None
    missing = [k for k in required if k not in out]
    if missing:
        raise UsageError(f"missing argument(s): {', '.join(missing)}")
    return out


def format_float(v: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(v))


def cmd_eval(args, cfg: EvalConfig) -> int:
    required, fn = _FUNCTIONS[args.function]
    kw = _parse_assignments(args.args, required)
    value = fn(cfg, **kw)
    print(format_float(value))
    return EXIT_OK


# -- figure ---------------------------------------------------------------------


@dataclass(frozen=True)
class CurveSpec:
    panel: str  # "left" or "right"
    a_values: tuple[float, ...]
    n_values: tuple[int, ...] = ()
    grid_range: tuple[float, float, float] = (0.5, 10.0, 0.05)

    def __post_init__(self):
        lo, hi, step = self.grid_range
        if not (step > 0 and hi >= lo) or not all(map(math.isfinite, self.grid_range)):
            raise UsageError(f"invalid range {self.grid_range}")
        if not self.a_values or any(a <= 0 for a in self.a_values):
            raise UsageError("a values must be a non-empty list of positive numbers")
        if self.panel == "left":
            if lo <= 0:
                raise UsageError("left panel needs b_lo > 0")
            if not self.n_values or any(n < 1 for n in self.n_values):
                raise UsageError("n values must be a non-empty list of integers >= 1")
        elif lo <= 0:
            raise UsageError("right panel needs x_lo > 0")

    def grid(self) -> list[float]:
        lo, hi, step = self.grid_range
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        return [round(lo + i * step, 12) for i in range(count)]


LEFT_DEFAULT = CurveSpec("left", (0.1, 1.0, 10.0), (1, 2, 3), (0.5, 10.0, 0.05))
RIGHT_DEFAULT = CurveSpec("right", (0.4, 0.6, 0.8, 1.0, 1.5, 2.0, 3.0, 4.0), (), (0.05, 5.0, 0.05))


def figure_rows(spec: CurveSpec, cfg: EvalConfig = DEFAULT_CONFIG) -> tuple[list[str], list[list[float]]]:
    grid = spec.grid()
    if spec.panel == "left":
        rows = [
            [a, n, b, be.f_be(n, be.BEParams(a, b), cfg)]
            for a in sorted(spec.a_values)
            for n in sorted(spec.n_values)
            for b in grid
        ]
        return ["a", "n", "b", "value"], rows
    rows = [[a, x, be.pdf(x, be.BEParams(a, 1.0))] for a in sorted(spec.a_values) for x in grid]
    return ["a", "x", "density"], rows


def render_csv(header: list[str], rows: list[list[float]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([str(v) if isinstance(v, int) else format_float(v) for v in row])
    return buf.getvalue()


def cmd_figure(args, cfg: EvalConfig) -> int:
    base = LEFT_DEFAULT if args.panel == "left" else RIGHT_DEFAULT
    spec = base
    if args.a_values:
        spec = replace(spec, a_values=tuple(args.a_values))
    if args.n_values:
        spec = replace(spec, n_values=tuple(args.n_values))
    rng = args.b_range if args.panel == "left" else args.x_range
    if rng:
        spec = replace(spec, grid_range=tuple(rng))
    header, rows = figure_rows(spec, cfg)
    _write(render_csv(header, rows), args.out)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------


def cmd_verify(args, cfg: EvalConfig) -> int:
    thresholds = replace(DEFAULT_THRESHOLDS, margin=args.margin)
    reports = run_suite(args.suite, seed=args.seed, thresholds=thresholds, cfg=cfg)
    payload = json.dumps([r.to_json() for r in reports], indent=2, allow_nan=False) + "\n"
    _write(payload, args.out)
    failed = sum(not r.passed for r in reports)
    print(f"{args.suite}: {len(reports) - failed}/{len(reports)} checks passed", file=sys.stderr)
    for r in reports:
        if not r.passed:
            print(f"  FAIL {r.check} {json.dumps(r.params)} margin={r.margin!r}", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


# -- plumbing ---------------------------------------------------------------------


class _OutputError(Exception):
    pass


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _OutputError(str(exc)) from exc


def _triple(name: str):
    def parse(text: str) -> tuple[float, float, float]:
        parts = text.split(",")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"{name} must be lo,hi,step")
        try:
            return tuple(float(p) for p in parts)  # type: ignore[return-value]
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be three numbers") from None

    return parse


def _float_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitz-be",
        description="Hurwitz zeta monotonicity and beta-exponential numerics.",
    )
    parser.add_argument("--rel-tol", type=float, default=DEFAULT_CONFIG.rel_tol,
                        help="relative tolerance of series evaluations (default: %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one function and print the value")
    p_eval.add_argument("function", choices=sorted(_FUNCTIONS))
    p_eval.add_argument("args", nargs="*", metavar="key=value")
    p_eval.set_defaults(handler=cmd_eval)

    p_fig = sub.add_parser("figure", help="write curve data of the two dichotomy panels as CSV")
    p_fig.add_argument("panel", choices=["left", "right"],
                       help="left: b -> f_BE(n, a, b); right: x -> density g(x; a, 1)")
    p_fig.add_argument("--a-values", type=_float_list,
                       help="comma-separated a values (left default 0.1,1,10; right default 0.4,...,4)")
    p_fig.add_argument("--n-values", type=_int_list, help="comma-separated orders n (default 1,2,3)")
    p_fig.add_argument("--b-range", type=_triple("--b-range"), help="lo,hi,step (default 0.5,10,0.05)")
    p_fig.add_argument("--x-range", type=_triple("--x-range"), help="lo,hi,step (default 0.05,5,0.05)")
    p_fig.add_argument("--out", help="output path (default: stdout)")
    p_fig.set_defaults(handler=cmd_figure)

    p_ver = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    p_ver.add_argument("suite", choices=sorted(SUITES))
    p_ver.add_argument("--seed", type=_u64, default=0, help="RNG seed (default: %(default)s)")
    p_ver.add_argument("--margin", type=float, default=DEFAULT_THRESHOLDS.margin,
                       help="required margin on consecutive differences (default: %(default)s)")
    p_ver.add_argument("--out", help="output path (default: stdout)")
    p_ver.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = EvalConfig(rel_tol=args.rel_tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.handler(args, cfg)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _OutputError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
