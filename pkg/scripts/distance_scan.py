#!/usr/bin/env python3
"""Tabulate the energy decomposition against distance for several field strengths.

Writes one CSV per field strength (or a single combined CSV), covering
the transition from the baseline-dominated to the field-dominated
regime.  Useful as the starting point for distance-dependence plots.
"""

import argparse
import math
import sys
from pathlib import Path

from starkvdw.analysis import SweepSpec, rows_to_csv, sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r-min", type=float, default=1e-9)
    parser.add_argument("--r-max", type=float, default=1e-5)
    parser.add_argument("--points", type=int, default=121)
    parser.add_argument("--theta", type=float, default=math.pi / 2)
    parser.add_argument(
        "--fields", type=float, nargs="+", default=[1e4, 1e5, 1e6],
        help="field strengths in V/m, applied equally to both atoms",
    )
    parser.add_argument("--outdir", type=Path, default=Path("scan_output"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for field in args.fields:
        spec = SweepSpec(
            r_range=(args.r_min, args.r_max, args.points, "log"),
            theta=args.theta,
            field_range=(field, field, 1),
        )
        rows = sweep(spec)
        path = args.outdir / f"distance_scan_{field:.3g}Vpm.csv"
        path.write_text(rows_to_csv(rows))
        repulsive = sum(1 for row in rows if row["total_eV"] > 0)
        print(f"{path}: {len(rows)} rows, {repulsive} net-repulsive points")
    return 0


if __name__ == "__main__":
    sys.exit(main())
