"""Dump the interior log-derivative curves g(k, a) for plotting.

For each requested radius the script samples g on a k grid in both interior
bases, writes one CSV per radius, and reports how much of the oscillatory
curve sits near the value -1 (the fraction the solver records during
verification, measured with the same half-width 0.15).  Poles of the
oscillatory basis are flagged in the output rather than interpolated over;
the modified basis must come out pole-free, which is the one hard check.
Run from the repository root:

    python3 scripts/g_curve_data.py --out-dir data
"""

import argparse
import csv
import math
import os
import sys

from deltacrit.radial import InteriorBasis, g_eval

POLE_MAGNITUDE = 1e6
NEAR_UNIT_HALF_WIDTH = 0.15


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a", type=float, nargs="+", default=[0.5, 2.0, 4.0, 10.0])
    ap.add_argument("--k-min", type=float, default=0.5)
    ap.add_argument("--k-max", type=float, default=10.0)
    ap.add_argument("--points", type=int, default=500)
    ap.add_argument("--out-dir", default="data")
    args = ap.parse_args(argv)
    if args.points < 2 or not 0 < args.k_min < args.k_max:
        ap.error("need points >= 2 and 0 < k-min < k-max")

    os.makedirs(args.out_dir, exist_ok=True)
    step = (args.k_max - args.k_min) / (args.points - 1)
    grid = [args.k_min + i * step for i in range(args.points)]
    modified_pole_free = True
    for a in args.a:
        path = os.path.join(args.out_dir, f"g_curve_a{a:g}.csv")
        near = 0
        poles = 0
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(("k", "g_oscillatory", "pole_flag", "g_modified"))
            for k in grid:
                g_osc = g_eval(k, a, InteriorBasis.JY)
                flagged = not math.isfinite(g_osc) or abs(g_osc) > POLE_MAGNITUDE
                g_mod = g_eval(k, a, InteriorBasis.IK)
                if not math.isfinite(g_mod) or abs(g_mod) > POLE_MAGNITUDE:
                    modified_pole_free = False
                if flagged:
                    poles += 1
                elif abs(g_osc + 1.0) < NEAR_UNIT_HALF_WIDTH:
                    near += 1
                writer.writerow((f"{k:.17g}",
                                 "" if flagged else f"{g_osc:.17g}",
                                 int(flagged),
                                 f"{g_mod:.17g}"))
        fraction = near / max(1, args.points - poles)
        print(f"a = {a:g}: wrote {args.points} rows to {path}; "
              f"{poles} flagged pole samples; "
              f"near-(-1) fraction of the oscillatory curve: {fraction:.3f}")

    print(f"check: modified-basis curve finite at every sample: "
          f"{'PASS' if modified_pole_free else 'FAIL'}")
    return 0 if modified_pole_free else 1


if __name__ == "__main__":
    sys.exit(main())
