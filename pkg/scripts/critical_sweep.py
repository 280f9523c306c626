"""Sweep the critical coupling across well radii and compare to closed forms.

Two families are swept on a log grid in a:

  * half-line with a Dirichlet wall: existence bisection against the exact
    threshold 1/a,
  * radial exterior problem (shell at 1 + a, modified interior basis):
    infimum of the coupling curve against 1 / ((1 + a) * log(1 + a)).

The script prints one row per radius and a final check line per family;
the exit status is 0 only if both checks pass.  Run from the repository
root:

    python3 scripts/critical_sweep.py --points 13 --out sweep.csv
"""

import argparse
import csv
import math
import sys

from deltacrit.critical import beta_cr_analytic_dirichlet_1d, beta_cr_search
from deltacrit.halfline import DIRICHLET, Problem1D
from deltacrit.radial import InteriorBasis, Problem2D


def log_grid(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [lo]
    step = (math.log(hi) - math.log(lo)) / (n - 1)
    return [math.exp(math.log(lo) + i * step) for i in range(n)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a-min", type=float, default=0.1)
    ap.add_argument("--a-max", type=float, default=10.0)
    ap.add_argument("--points", type=int, default=13)
    ap.add_argument("--tol", type=float, default=1e-9,
                    help="bisection tolerance, scaled by 1/a per row")
    ap.add_argument("--out", default=None, help="also write the rows as CSV")
    args = ap.parse_args(argv)
    if args.points < 1 or not 0 < args.a_min <= args.a_max:
        ap.error("need points >= 1 and 0 < a-min <= a-max")

    rows = []
    worst_1d = 0.0
    worst_2d = 0.0
    print(f"{'a':>10}  {'family':<8}  {'beta_cr':>22}  {'closed form':>22}  {'rel err':>10}")
    for a in log_grid(args.a_min, args.a_max, args.points):
        found = beta_cr_search(Problem1D(a=a, beta=1.0, bc=DIRICHLET),
                               tol=args.tol / a).beta_cr
        exact = beta_cr_analytic_dirichlet_1d(a)
        rel = abs(found - exact) / exact
        worst_1d = max(worst_1d, rel)
        rows.append((a, "1d", found, exact, rel))

        found2 = beta_cr_search(Problem2D(a=a, beta=0.1, mode=InteriorBasis.IK),
                                tol=1e-12).beta_cr
        exact2 = 1.0 / ((1.0 + a) * math.log(1.0 + a))
        rel2 = abs(found2 - exact2) / exact2
        worst_2d = max(worst_2d, rel2)
        rows.append((a, "radial", found2, exact2, rel2))
        for row in rows[-2:]:
            print(f"{row[0]:>10.5f}  {row[1]:<8}  {row[2]:>22.16g}  "
                  f"{row[3]:>22.16g}  {row[4]:>10.2e}")

    if args.out:
        with open(args.out, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(("a", "family", "beta_cr", "closed_form", "rel_err"))
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.out}")

    ok_1d = worst_1d <= 10.0 * args.tol
    ok_2d = worst_2d <= 1e-6
    print(f"check: half-line threshold matches 1/a "
          f"(worst rel err {worst_1d:.2e}): {'PASS' if ok_1d else 'FAIL'}")
    print(f"check: radial threshold matches 1/((1+a)log(1+a)) "
          f"(worst rel err {worst_2d:.2e}): {'PASS' if ok_2d else 'FAIL'}")
    return 0 if ok_1d and ok_2d else 1


if __name__ == "__main__":
    sys.exit(main())
