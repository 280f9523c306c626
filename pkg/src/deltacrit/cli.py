"""Command-line interface.

Subcommands: ``solve`` (bound states), ``betacr`` (critical-coupling sweep),
``gplot`` (shell log-derivative curves as plot-ready data), ``oracle``
(finite-difference spectra), ``verify`` (self-check suites), and ``bessel``
(direct evaluator access).

Output is CSV (header row, RFC 4180 quoting, 17 significant digits) or JSON
(a ``meta`` object echoing the inputs plus a ``rows`` array).  Identical
invocations produce byte-identical output; wall-clock timestamps appear only
in JSON meta and only when ``--stamp`` is passed.  Exit codes: 0 success,
1 verification failure, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from datetime import datetime, timezone
from typing import Optional, Sequence, TextIO

from . import __version__, bessel, critical, fdgrid, halfline, radial, verify
from .halfline import BcKind, BoundaryCondition, Problem1D
from .radial import InteriorBasis, Problem2D

_POLE_MAGNITUDE = 1e6
_NEAR_UNIT_HALF_WIDTH = 0.15


def _cell(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _jval(value: object) -> object:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


def _emit(
    columns: Sequence[str],
    rows: Sequence[dict],
    meta: dict,
    fmt: str,
    out: TextIO,
) -> None:
    if fmt == "csv":
        writer = csv.writer(out)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
    else:
        payload = {
            "meta": {k: _jval(v) if not isinstance(v, dict) else v for k, v in meta.items()},
            "rows": [{c: _jval(row[c]) for c in columns} for row in rows],
        }
        out.write(json.dumps(payload, indent=2, allow_nan=False) + "\n")


def _meta(command: str, inputs: dict, count: int, stamp: bool) -> dict:
    meta = {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "count": count,
    }
    if stamp:
        meta["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return meta


def _boundary(args: argparse.Namespace) -> BoundaryCondition:
    kind = BcKind(args.bc)
    if kind is BcKind.ROBIN:
        return halfline.robin(args.sigma)
    return BoundaryCondition(kind=kind)


def _warn_bc_ignored(args: argparse.Namespace) -> None:
    if args.bc is not None:
        print(
            "warning: --bc is ignored for --dim 2; the inner circle is always Dirichlet",
            file=sys.stderr,
        )


def _cmd_solve(args: argparse.Namespace) -> int:
    columns = ("k", "lambda", "dispersion_residual", "jump_residual")
    if args.dim == 1:
        if args.bc is None:
            print("error: --bc is required with --dim 1", file=sys.stderr)
            return 2
        problem = Problem1D(a=args.a, beta=args.beta, bc=_boundary(args))
        states = halfline.solve_bound_states(problem)
        inputs = {"dim": 1, "bc": args.bc, "sigma": args.sigma,
                  "a": args.a, "beta": args.beta}
    else:
        _warn_bc_ignored(args)
        problem2 = Problem2D(a=args.a, beta=args.beta, mode=InteriorBasis(args.mode))
        states = radial.solve_bound_states_2d(problem2)
        inputs = {"dim": 2, "mode": args.mode, "a": args.a, "beta": args.beta}
    rows = [
        {
            "k": s.k,
            "lambda": s.eigenvalue,
            "dispersion_residual": s.dispersion_residual,
            "jump_residual": s.jump_residual,
        }
        for s in states
    ]
    meta = _meta("solve", inputs, len(rows), args.stamp)
    _emit(columns, rows, meta, args.format, sys.stdout)
    return 0 if all(s.converged for s in states) else 3


def _cmd_betacr(args: argparse.Namespace) -> int:
    if args.points < 1:
        print("error: --points must be at least 1", file=sys.stderr)
        return 2
    if args.points == 1:
        a_values = [args.a_min]
    elif args.log:
        ratio = args.a_max / args.a_min
        a_values = [args.a_min * ratio ** (i / (args.points - 1)) for i in range(args.points)]
    else:
        step = (args.a_max - args.a_min) / (args.points - 1)
        a_values = [args.a_min + step * i for i in range(args.points)]

    if args.dim == 1:
        if args.bc is None:
            print("error: --bc is required with --dim 1", file=sys.stderr)
            return 2
        template: object = Problem1D(a=1.0, beta=1.0, bc=_boundary(args))
        inputs = {"dim": 1, "bc": args.bc, "sigma": args.sigma,
                  "a_min": args.a_min, "a_max": args.a_max,
                  "points": args.points, "log": args.log, "tol": args.tol}
    else:
        _warn_bc_ignored(args)
        template = Problem2D(a=1.0, beta=1.0, mode=InteriorBasis(args.mode))
        inputs = {"dim": 2, "mode": args.mode,
                  "a_min": args.a_min, "a_max": args.a_max,
                  "points": args.points, "log": args.log, "tol": args.tol}

    sweep = critical.beta_cr_sweep(a_values, template, tol=args.tol)
    columns = ("a", "beta_cr", "method", "check")
    rows = [
        {"a": r.a, "beta_cr": r.beta_cr, "method": r.method, "check": r.check}
        for r in sweep
    ]
    meta = _meta("betacr", inputs, len(rows), args.stamp)
    _emit(columns, rows, meta, args.format, sys.stdout)
    return 0 if all(not r.error for r in sweep) else 3


def _cmd_gplot(args: argparse.Namespace) -> int:
    if args.points < 2:
        print("error: --points must be at least 2", file=sys.stderr)
        return 2
    if not 0.0 < args.k_min < args.k_max:
        print("error: need 0 < --k-min < --k-max", file=sys.stderr)
        return 2
    mode = InteriorBasis(args.mode)
    step = (args.k_max - args.k_min) / (args.points - 1)
    rows = []
    near = 0
    clear = 0
    for i in range(args.points):
        k = args.k_max if i == args.points - 1 else args.k_min + step * i
        g = radial.g_eval(k, args.a, mode)
        pole = 0 if math.isfinite(g) and abs(g) <= _POLE_MAGNITUDE else 1
        if pole == 0:
            clear += 1
            if abs(g + 1.0) < _NEAR_UNIT_HALF_WIDTH:
                near += 1
        rows.append({"k": k, "g": g, "pole_flag": pole})
    fraction = near / clear if clear else math.nan
    inputs = {"a": args.a, "k_min": args.k_min, "k_max": args.k_max,
              "points": args.points, "mode": args.mode}
    meta = _meta("gplot", inputs, len(rows), args.stamp)
    meta["near_unit_fraction"] = fraction
    meta["near_unit_half_width"] = _NEAR_UNIT_HALF_WIDTH
    if args.format == "csv":
        print(f"near-unit fraction |g+1| < {_NEAR_UNIT_HALF_WIDTH:g}: "
              f"{fraction:.6f} over {clear} non-pole samples", file=sys.stderr)
    _emit(("k", "g", "pole_flag"), rows, meta, args.format, sys.stdout)
    return 0


def _arbitration_meta(problem2: Problem2D, fd_lams: Sequence[float]) -> dict:
    fd_neg = [lam for lam in fd_lams if lam < -1e-6]
    target = min(fd_neg) if fd_neg else None
    report = {}
    for mode in (InteriorBasis.JY, InteriorBasis.IK):
        states = radial.solve_bound_states_2d(
            Problem2D(a=problem2.a, beta=problem2.beta, mode=mode))
        lams = sorted(s.eigenvalue for s in states)
        entry: dict = {"analytic_count": len(lams)}
        if target is not None and lams:
            nearest = min(lams, key=lambda v: abs(v - target))
            entry["nearest_lambda"] = nearest
            entry["rel_diff"] = abs(nearest - target) / abs(target)
        else:
            entry["nearest_lambda"] = None
            entry["rel_diff"] = None
        report[mode.value] = entry
    report["fd_negative_count"] = len(fd_neg)
    return report


def _cmd_oracle(args: argparse.Namespace) -> int:
    config = fdgrid.FdConfig(h=args.h, extent=args.extent, well_width=args.well_width)
    if args.dim == 1:
        if args.bc is None:
            print("error: --bc is required with --dim 1", file=sys.stderr)
            return 2
        problem = Problem1D(a=args.a, beta=args.beta, bc=_boundary(args))
        if args.richardson:
            lams = fdgrid.fd_halfline_richardson(problem, config, count=args.count)
        else:
            lams = fdgrid.fd_halfline_spectrum(problem, config, count=args.count)
        inputs = {"dim": 1, "bc": args.bc, "sigma": args.sigma, "a": args.a,
                  "beta": args.beta, "h": args.h, "extent": args.extent,
                  "count": args.count, "well_width": args.well_width,
                  "richardson": args.richardson}
        arbitration = None
    else:
        _warn_bc_ignored(args)
        if args.well_width is not None:
            print("error: --well-width applies only to --dim 1", file=sys.stderr)
            return 2
        problem2 = Problem2D(a=args.a, beta=args.beta)
        if args.richardson:
            lams = fdgrid.fd_radial_richardson(problem2, config, count=args.count)
        else:
            lams = fdgrid.fd_radial_spectrum(problem2, config, count=args.count)
        inputs = {"dim": 2, "a": args.a, "beta": args.beta, "h": args.h,
                  "extent": args.extent, "count": args.count,
                  "richardson": args.richardson}
        arbitration = _arbitration_meta(problem2, lams)

    rows = [{"index": i, "lambda": lam} for i, lam in enumerate(lams)]
    meta = _meta("oracle", inputs, len(rows), args.stamp)
    if arbitration is not None:
        meta["arbitration"] = arbitration
        if args.format == "csv":
            print("arbitration: " + json.dumps(arbitration, allow_nan=False),
                  file=sys.stderr)
    _emit(("index", "lambda"), rows, meta, args.format, sys.stdout)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    suites = None if args.suite is None else [args.suite]
    rows, meta = verify.run(suites, tol_scale=args.tol_scale)
    for row in rows:
        print(f"[{row.status}] {row.suite}/{row.name}: {row.detail}", file=sys.stderr)
    counts = meta["counts"]
    print(f"{counts['pass']} passed, {counts['fail']} failed, "
          f"{counts['info']} informational", file=sys.stderr)
    meta_out = _meta("verify", {"suite": args.suite or "all",
                                "tol_scale": args.tol_scale}, len(rows), args.stamp)
    meta_out["suites"] = meta["suites"]
    meta_out["counts"] = counts
    meta_out["ok"] = meta["ok"]
    _emit(("suite", "name", "status", "detail"),
          [{"suite": r.suite, "name": r.name, "status": r.status, "detail": r.detail}
           for r in rows],
          meta_out, "json", sys.stdout)
    return 0 if meta["ok"] else 1


def _cmd_bessel(args: argparse.Namespace) -> int:
    kind = bessel.BesselKind(f"{args.family}{args.order}")
    value = bessel.bessel_eval(kind, args.x, scaled=args.scaled)
    rows = [{"family": args.family, "order": args.order, "x": args.x,
             "scaled": int(args.scaled), "value": value}]
    inputs = {"family": args.family, "order": args.order,
              "x": args.x, "scaled": args.scaled}
    meta = _meta("bessel", inputs, 1, args.stamp)
    _emit(("family", "order", "x", "scaled", "value"), rows, meta, args.format, sys.stdout)
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--stamp", action="store_true",
                        help="include a UTC timestamp in JSON meta")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltacrit",
        description="Bound states and critical coupling of attractive delta potentials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="bound states for one problem")
    p.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p.add_argument("--bc", choices=("dirichlet", "neumann", "robin"))
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--mode", choices=("paper", "paper-eq13", "modified"),
                   default="modified")
    _add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("betacr", help="critical-coupling sweep over a")
    p.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p.add_argument("--bc", choices=("dirichlet", "neumann", "robin"))
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--log", action="store_true")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--mode", choices=("paper", "paper-eq13", "modified"),
                   default="modified")
    _add_common(p)
    p.set_defaults(func=_cmd_betacr)

    p = sub.add_parser("gplot", help="shell log-derivative curve data")
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--k-min", type=float, required=True)
    p.add_argument("--k-max", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--mode", choices=("paper", "modified"), default="paper")
    _add_common(p)
    p.set_defaults(func=_cmd_gplot)

    p = sub.add_parser("oracle", help="finite-difference reference spectra")
    p.add_argument("--dim", type=int, choices=(1, 2), required=True)
    p.add_argument("--bc", choices=("dirichlet", "neumann", "robin"))
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--extent", type=float, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--well-width", type=float, default=None)
    p.add_argument("--richardson", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", choices=("specfun", "1d", "2d", "oracle", "all"))
    p.add_argument("--tol-scale", type=float, default=1.0)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bessel", help="evaluate one Bessel function")
    p.add_argument("--family", choices=("J", "Y", "I", "K"), required=True)
    p.add_argument("--order", type=int, choices=(0, 1), required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--scaled", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_bessel)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (bessel.DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
