#!/usr/bin/env python3
"""Map the crossover field strength and the unstable equilibrium distance.

For each separation, prints the common field strength at which the
field-assisted component matches the unperturbed baseline; then, for a
ladder of field strengths, locates the distance where the total radial
force vanishes.
"""

import argparse
import math
import sys

import numpy as np

from starkvdw.analysis import NoSolutionError, crossover_field, equilibrium_distance


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--r-min", type=float, default=1e-8)
    parser.add_argument("--r-max", type=float, default=1e-5)
    parser.add_argument("--points", type=int, default=16)
    parser.add_argument("--theta", type=float, default=math.pi / 2)
    parser.add_argument(
        "--fields", type=float, nargs="+", default=[3e3, 1e4, 3e4, 1e5],
        help="field ladder for the equilibrium search (V/m)",
    )
    args = parser.parse_args()

    print(f"{'r_m':>12}  {'crossover_Vpm':>14}")
    for r in np.geomspace(args.r_min, args.r_max, args.points):
        result = crossover_field(float(r), args.theta)
        print(f"{r:12.4e}  {result.value:14.5e}")

    print(f"\n{'field_Vpm':>12}  {'equilibrium_m':>14}  {'stability':>10}")
    for field in args.fields:
        try:
            result = equilibrium_distance(args.theta, field, field, (1e-8, 1e-4))
        except NoSolutionError:
            print(f"{field:12.3e}  {'none in bracket':>14}")
            continue
        print(f"{field:12.3e}  {result.value:14.5e}  {result.stability:>10}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
