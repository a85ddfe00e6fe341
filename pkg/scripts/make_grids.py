"""Emit surface data for each chemical family's counting polynomial.

For every family the polynomial is evaluated on a lattice at the parameters
conventionally used for its illustration (generation or size 5), giving the
(x, y, M(x, y)) data behind the usual surface plots.

Usage:
    python scripts/make_grids.py [--outdir DIR] [--steps N] [--lo X] [--hi X]
"""

import argparse
import csv
import pathlib

from mpoly_topo import catalog_mpoly, eval_grid, get_info, make_spec
from mpoly_topo.families import Family

GRID_SPECS = {
    "boron": {"a": 5, "b": 5},
    "petim": {"n": 5},
    "dnpn": {"n": 5},
    "dpzn": {"n": 5},
    "petaa": {"n": 5},
    "benzenoid": {"m": 5, "n": 5},
    "pah": {"n": 5},
    "vphx": {"m": 5, "n": 5},
    "vphy": {"m": 5, "n": 5},
    "pg": {"p": 5, "q": 5},
    "tadpole": {"n": 5, "m": 5},
    "polyphenylene": {"s": 5, "t": 5},
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", default="build/grids", type=pathlib.Path)
    parser.add_argument("--steps", default=25, type=int)
    parser.add_argument("--lo", default=0.0, type=float)
    parser.add_argument("--hi", default=1.0, type=float)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for token, params in GRID_SPECS.items():
        spec = make_spec(Family.from_token(token), params)
        poly = catalog_mpoly(spec)
        points = eval_grid(poly, (args.lo, args.hi), (args.lo, args.hi), args.steps)
        path = args.outdir / f"{token}.csv"
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["x", "y", "value"])
            writer.writerows(points)
        print(f"wrote {path} ({len(points)} points, M = {poly})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
