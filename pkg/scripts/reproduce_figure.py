"""Write both dichotomy panels as CSV files into a directory."""

import argparse
import pathlib
import sys

from hurwitz_be.cli import main


def run(out_dir: pathlib.Path) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    for panel in ("left", "right"):
        path = out_dir / f"figure_{panel}.csv"
        code = main(["figure", panel, "--out", str(path)])
        if code:
            return code
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("out_dir", nargs="?", default="figure_data", type=pathlib.Path)
    sys.exit(run(parser.parse_args().out_dir))
