#!/usr/bin/env python3
"""How much the compiled LUT moves as the defuzzification grid is refined.

Prints, for each grid size, the largest change in pre-rounding LUT value
relative to the next coarser grid, and how many rounded entries differ.
"""

import argparse
import copy

import numpy as np

from fuzzylens.config import DEFAULT_CONFIG, parse_config
from fuzzylens.enhancement import lut_values, round_half_away


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[101, 251, 501, 1001, 2001, 4001])
    args = ap.parse_args(argv)

    prev = None
    print(f"{'grid':>6} {'max |dv|':>10} {'bound':>8} {'entries changed':>16}")
    for n in args.sizes:
        raw = copy.deepcopy(DEFAULT_CONFIG)
        raw["grid_points"] = n
        vals = lut_values(parse_config(raw).build_engine())
        if prev is not None:
            dv = np.max(np.abs(vals - prev))
            changed = int(np.count_nonzero(round_half_away(vals) != round_half_away(prev)))
            print(f"{n:>6} {dv:>10.5f} {256 / n:>8.4f} {changed:>16}")
        else:
            print(f"{n:>6} {'-':>10} {256 / n:>8.4f} {'-':>16}")
        prev = vals


if __name__ == "__main__":
    main()
