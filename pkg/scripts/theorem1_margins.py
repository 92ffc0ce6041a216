"""Smallest consecutive difference of x -> f(x, a, b) over the standard grid.

Prints, per (a, b), the signed minimum from the double-precision scan next to
the same quantity from a 40-digit mpmath evaluation.  Rows whose true margin
is below the threshold cannot pass a margin check on that grid.

    python scripts/theorem1_margins.py [--margin 1e-10] [--no-reference]
"""

import argparse

import numpy as np

from hurwitz_be.verification import STANDARD_GRID, scan_f_monotonicity
from hurwitz_be.zeta_monotonicity import Direction, classify_direction


def reference_margin(a, b, xs):
    import mpmath as mp

    with mp.workdps(40):
        aa, bb = mp.mpf(a), mp.mpf(b)
        vals = []
        for x in xs:
            x = mp.mpf(x)
            d = mp.digamma(aa + bb) - mp.digamma(bb) if x == 1 else mp.zeta(x, bb) - mp.zeta(x, aa + bb)
            vals.append(d ** (1 / x))
        sign = 1 if classify_direction(a) is Direction.INCREASING else -1
        return float(min(sign * (v2 - v1) for v1, v2 in zip(vals, vals[1:])))


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--margin", type=float, default=1e-10)
    parser.add_argument("--no-reference", action="store_true", help="skip the mpmath column")
    args = parser.parse_args()

    xs = STANDARD_GRID.x_grid
    print(f"{'a':>6} {'b':>5} {'scan':>12} {'reference':>12}  points<margin")
    for a, b in STANDARD_GRID.ab_pairs():
        if a == 1:
            continue
        rep = scan_f_monotonicity(a, b, xs, margin=0.0)
        sign = 1 if rep.claimed is Direction.INCREASING else -1
        steps = sign * np.diff([v for _, v in rep.grid])
        below = int(np.sum(steps <= args.margin))
        ref = "" if args.no_reference else f"{reference_margin(a, b, xs):12.4g}"
        print(f"{a:6g} {b:5g} {rep.min_margin:12.4g} {ref:>12}  {below}")


if __name__ == "__main__":
    main()
