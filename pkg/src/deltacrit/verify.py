"""Built-in verification suites.

Four suites cross-check the analytic layer against frozen reference values,
internal inequalities, and the finite-difference oracle:

* ``specfun``: Bessel evaluator Wronskians, ratio bounds, spot values.
* ``1d``: half-line dispersion roots, thresholds, eigenvalue bounds.
* ``2d``: shell dispersion routes, window containment, threshold closed form.
* ``oracle``: finite-difference spectra vs analytic roots, including the
  interior-basis arbitration run.

Every check yields a CheckRow with status PASS, FAIL, or INFO.  INFO rows
record measured quantities (branch locations, near-unit fractions, residual
errors) that are reported rather than asserted.  Row order and detail strings
are deterministic, so two runs with the same inputs produce identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import bessel, critical, fdgrid, halfline, radial
from .halfline import DIRICHLET, NEUMANN, Problem1D, robin
from .radial import InteriorBasis, Problem2D

SUITE_NAMES = ("specfun", "1d", "2d", "oracle")

# frozen to 30-digit evaluations of the corresponding closed forms
_J0_AT_1 = 0.7651976865579666
_Y0_AT_1 = 0.08825696421567696
_I0_AT_1 = 1.2660658777520084
_K0_AT_1 = 0.42102443824070834
_KRATIO_AT_1 = 1.4296253982604018
_KRATIO_AT_2 = 1.228036929818908
_DIRICHLET_ROOT = 1.4107196860610394  # a=1, beta=3
_NEUMANN_ROOT = 0.6392322713805369  # a=1, beta=1
_ROBIN_ROOTS = (0.3921191172733511, 1.0680398527841986)  # a=2, beta=1.5, sigma=1


@dataclass(frozen=True)
class CheckRow:
    suite: str
    name: str
    status: str
    detail: str


def _log_grid(lo: float, hi: float, n: int) -> list[float]:
    r = hi / lo
    return [lo * r ** (i / (n - 1)) for i in range(n)]


def _row(suite: str, name: str, ok: bool, detail: str) -> CheckRow:
    return CheckRow(suite=suite, name=name, status="PASS" if ok else "FAIL", detail=detail)


def _info(suite: str, name: str, detail: str) -> CheckRow:
    return CheckRow(suite=suite, name=name, status="INFO", detail=detail)


def _suite_specfun(ts: float) -> list[CheckRow]:
    rows: list[CheckRow] = []
    grid = _log_grid(0.05, 100.0, 1000)

    tol = 1e-10 * ts
    worst = max(
        abs((bessel.j1(x) * bessel.y0(x) - bessel.j0(x) * bessel.y1(x)) * math.pi * x / 2.0 - 1.0)
        for x in grid
    )
    rows.append(_row("specfun", "wronskian-jy", worst <= tol,
                     f"max rel residual {worst:.3e} over [0.05,100] (tol {tol:.1e})"))

    worst = max(
        abs((bessel.i0e(x) * bessel.k1e(x) + bessel.i1e(x) * bessel.k0e(x)) * x - 1.0)
        for x in grid
    )
    rows.append(_row("specfun", "wronskian-ik", worst <= tol,
                     f"max rel residual {worst:.3e} over [0.05,100] (tol {tol:.1e})"))

    kgrid = _log_grid(1e-3, 50.0, 1000)
    bad = 0
    prev = math.inf
    monotone = True
    for x in kgrid:
        r = bessel.k1k0_ratio(x)
        lo, hi = bessel.k_ratio_bounds(x)
        if not lo < r < hi:
            bad += 1
        if not r < prev:
            monotone = False
        prev = r
    rows.append(_row("specfun", "k-ratio-bounds-strict", bad == 0,
                     f"{bad} of {len(kgrid)} points outside the strict envelope on [1e-3,50]"))
    rows.append(_row("specfun", "k-ratio-decreasing", monotone,
                     "K1/K0 strictly decreasing on the same grid" if monotone
                     else "K1/K0 failed to decrease somewhere on [1e-3,50]"))

    spots = (
        ("j0(1)", bessel.j0(1.0), _J0_AT_1),
        ("y0(1)", bessel.y0(1.0), _Y0_AT_1),
        ("i0(1)", bessel.i0(1.0), _I0_AT_1),
        ("k0(1)", bessel.k0(1.0), _K0_AT_1),
        ("k1k0(1)", bessel.k1k0_ratio(1.0), _KRATIO_AT_1),
        ("k1k0(2)", bessel.k1k0_ratio(2.0), _KRATIO_AT_2),
    )
    tol = 1e-12 * ts
    worst_name, worst = max(
        ((name, abs(got - want) / abs(want)) for name, got, want in spots),
        key=lambda t: t[1],
    )
    rows.append(_row("specfun", "spot-values", worst <= tol,
                     f"worst rel error {worst:.3e} at {worst_name} (tol {tol:.1e})"))
    return rows


def _suite_1d(ts: float) -> list[CheckRow]:
    rows: list[CheckRow] = []

    tol = 1e-8 * ts
    worst = 0.0
    for a in (0.5, 1.0, 4.0):
        res = critical.beta_cr_search(Problem1D(a=a, beta=1.0, bc=DIRICHLET), tol=1e-10 / a)
        worst = max(worst, abs(res.beta_cr * a - 1.0))
    rows.append(_row("1d", "dirichlet-threshold", worst <= tol,
                     f"max |a*beta_cr - 1| = {worst:.3e} over a in (0.5, 1, 4) (tol {tol:.1e})"))

    states = halfline.solve_bound_states(Problem1D(a=1.0, beta=3.0, bc=DIRICHLET))
    ok = (len(states) == 1
          and abs(states[0].k - _DIRICHLET_ROOT) <= 1e-11 * ts
          and abs(states[0].dispersion_residual) <= 1e-10 * ts
          and states[0].jump_residual <= 1e-8 * ts)
    k = states[0].k if states else math.nan
    rows.append(_row("1d", "dirichlet-frozen-root", ok,
                     f"a=1 beta=3: k = {k:.16g}, want {_DIRICHLET_ROOT:.16g}"))

    states = halfline.solve_bound_states(Problem1D(a=1.0, beta=1.0, bc=NEUMANN))
    ok = (len(states) == 1
          and abs(states[0].k - _NEUMANN_ROOT) <= 1e-11 * ts
          and states[0].jump_residual <= 1e-8 * ts)
    k = states[0].k if states else math.nan
    rows.append(_row("1d", "neumann-frozen-root", ok,
                     f"a=1 beta=1: k = {k:.16g}, want {_NEUMANN_ROOT:.16g}"))

    beta = 1e-6
    states = halfline.solve_bound_states(Problem1D(a=1.0, beta=beta, bc=NEUMANN))
    slack = 1e-12 * ts
    ok = (len(states) == 1
          and beta / 2.0 * (1.0 - slack) <= states[0].k <= beta * (1.0 + slack))
    k = states[0].k if states else math.nan
    rows.append(_row("1d", "neumann-tiny-coupling", ok,
                     f"beta=1e-6: k = {k:.9e} inside [beta/2, beta]"))

    res = critical.beta_cr_search(Problem1D(a=1.0, beta=1.0, bc=NEUMANN))
    rows.append(_row("1d", "neumann-threshold-zero", abs(res.beta_cr) <= 1e-10 * ts,
                     f"beta_cr = {res.beta_cr:.3e} (method {res.method.value})"))

    states = halfline.solve_bound_states(Problem1D(a=2.0, beta=0.0, bc=robin(1.0)))
    ok = (len(states) == 1
          and abs(states[0].k - 1.0) <= 1e-9 * ts
          and abs(states[0].dispersion_residual) <= 1e-12 * ts)
    detail = (f"beta=0 keeps k = {states[0].k:.16g}, residual {states[0].dispersion_residual:.1e}"
              if states else "no state found")
    rows.append(_row("1d", "robin-zero-coupling", ok, detail))

    states = halfline.solve_bound_states(Problem1D(a=2.0, beta=1.5, bc=robin(1.0)))
    ok = (len(states) == 2
          and abs(states[0].k - _ROBIN_ROOTS[0]) <= 1e-9 * ts
          and abs(states[1].k - _ROBIN_ROOTS[1]) <= 1e-9 * ts)
    rows.append(_row("1d", "robin-pole-excluded", ok,
                     f"a=2 beta=1.5: {len(states)} roots, pole at k=0.9575 skipped"))
    if states and states[0].k < 1.5 / 2.0:
        rows.append(_info("1d", "robin-branch-below-half-coupling",
                          f"a=2 beta=1.5: k = {states[0].k:.9g} < beta/2 = 0.75, "
                          f"lambda = {states[0].eigenvalue:.9g} > -beta^2/4 = -0.5625"))

    slack = 1e-12 * ts
    bad = []
    for a in (0.5, 1.0, 2.0, 5.0):
        for scale in (1.5, 3.0, 10.0):
            beta = scale / a
            for s in halfline.solve_bound_states(Problem1D(a=a, beta=beta, bc=DIRICHLET)):
                if not s.k <= beta / 2.0 * (1.0 + slack):
                    bad.append((a, beta, s.k))
    rows.append(_row("1d", "dirichlet-k-at-most-half-beta", not bad,
                     f"{len(bad)} violations of k <= beta/2 over 12 (a, beta) pairs"))

    bad = []
    for a in (0.5, 1.0, 2.0, 5.0):
        for beta in (0.1, 1.0, 5.0):
            for s in halfline.solve_bound_states(Problem1D(a=a, beta=beta, bc=NEUMANN)):
                if not beta / 2.0 * (1.0 - slack) <= s.k <= beta * (1.0 + slack):
                    bad.append((a, beta, s.k))
    rows.append(_row("1d", "neumann-k-in-half-to-full-beta", not bad,
                     f"{len(bad)} violations of beta/2 <= k <= beta over 12 (a, beta) pairs"))

    tol = 1e-10 * ts
    worst = 0.0
    for bc, pairs in ((DIRICHLET, ((0.7, 2.0), (1.0, 3.0), (2.0, 1.0), (5.0, 0.4))),
                      (NEUMANN, ((0.7, 2.0), (1.0, 1.0), (2.0, 0.3), (5.0, 0.4)))):
        for a, beta in pairs:
            prob = Problem1D(a=a, beta=beta, bc=bc)
            for s in halfline.solve_bound_states(prob):
                form = halfline.ReducedForm(z=2.0 * s.k * a, B=beta * a)
                worst = max(worst, abs(halfline.reduced_residual(form, bc.kind)))
    rows.append(_row("1d", "reduced-form-equivalence", worst <= tol,
                     f"max reduced-form residual {worst:.3e} at solved roots (tol {tol:.1e})"))

    ok = True
    for bc in (DIRICHLET, NEUMANN):
        prob = Problem1D(a=1.0, beta=1.0, bc=bc)
        prev = -math.inf
        for i in range(200):
            k = 0.05 + 0.05 * i
            v = halfline.dispersion_value(k, prob)
            if not v > prev:
                ok = False
            prev = v
    rows.append(_row("1d", "dispersion-increasing", ok,
                     "F strictly increasing on k in [0.05, 10] for Dirichlet and Neumann"))

    tol = 1e-6 * ts
    worst = max(
        abs(halfline.dispersion_value(1e-8, Problem1D(a=a, beta=1.0, bc=DIRICHLET)) - 1.0 / a) * a
        for a in (0.1, 1.0, 10.0)
    )
    rows.append(_row("1d", "dirichlet-small-k-limit", worst <= tol,
                     f"max rel deviation of F(1e-8) from 1/a is {worst:.3e} (tol {tol:.1e})"))
    return rows


def _suite_2d(ts: float) -> list[CheckRow]:
    rows: list[CheckRow] = []
    a_values = (0.5, 1.0, 2.0, 4.0, 10.0)

    bad = 0
    for a in a_values:
        for k in _log_grid(1e-3, 1e3, 40):
            if not radial.beta_of_k(k, a, InteriorBasis.UNIT_G) > 0.0:
                bad += 1
    rows.append(_row("2d", "unit-g-coupling-positive", bad == 0,
                     f"{bad} nonpositive couplings over 200 (k, a) samples"))

    bad = 0
    cap = 0
    total = 0
    for a in a_values:
        for k in _log_grid(0.01, 100.0, 200):
            total += 1
            b = radial.beta_of_k(k, a, InteriorBasis.UNIT_G)
            lo, hi = radial.beta_window(k, a)
            if not lo < b < hi:
                bad += 1
            if not hi < 0.5:
                cap += 1
    rows.append(_row("2d", "unit-g-inside-window", bad == 0,
                     f"{bad} of {total} samples outside the strict two-sided window"))
    rows.append(_row("2d", "window-upper-below-half", cap == 0,
                     f"{cap} of {total} window tops at or above 1/2"))

    ok = True
    for a in (0.5, 1.0, 2.0):
        prev = -math.inf
        for k in _log_grid(1e-6, 100.0, 60):
            v = radial.beta_of_k(k, a, InteriorBasis.IK)
            if not v > prev:
                ok = False
            prev = v
    rows.append(_row("2d", "modified-coupling-increasing", ok,
                     "beta(k) strictly increasing for the modified interior, a in (0.5, 1, 2)"))

    tol = 1e-5 * ts
    worst = 0.0
    for a in (0.5, 1.0, 2.0):
        res = critical.beta_cr_search(Problem2D(a=a, beta=1.0, mode=InteriorBasis.IK))
        want = 1.0 / ((1.0 + a) * math.log(1.0 + a))
        worst = max(worst, abs(res.beta_cr - want) / want)
    rows.append(_row("2d", "modified-threshold-closed-form", worst <= tol,
                     f"max rel error vs 1/((1+a) ln(1+a)) is {worst:.3e} (tol {tol:.1e})"))

    bad = 0
    for a in (0.5, 2.0, 10.0):
        for k in _log_grid(0.01, 50.0, 200):
            g = radial.g_eval(k, a, InteriorBasis.IK)
            if not (math.isfinite(g) and g < 0.0):
                bad += 1
    rows.append(_row("2d", "modified-interior-pole-free", bad == 0,
                     f"{bad} non-finite or nonnegative samples of the interior log-derivative"))

    for a in (0.5, 2.0, 4.0, 10.0):
        near = 0
        valid = 0
        for k in _log_grid(0.01, 100.0, 2000):
            g = radial.g_eval(k, a, InteriorBasis.JY)
            if math.isfinite(g) and abs(g) < 1e6:
                valid += 1
                if abs(g + 1.0) < 0.15:
                    near += 1
        frac = near / valid if valid else math.nan
        rows.append(_info("2d", f"oscillatory-g-near-unit-a{a:g}",
                          f"fraction of samples with |g+1| < 0.15 is {frac:.4f} "
                          f"({near} of {valid} non-pole samples, k in [0.01, 100])"))

    beta = radial.beta_of_k(1.0, 1.0, InteriorBasis.IK)
    states = radial.solve_bound_states_2d(Problem2D(a=1.0, beta=beta, mode=InteriorBasis.IK))
    ok = (len(states) == 1
          and abs(states[0].k - 1.0) <= 1e-9 * ts
          and states[0].jump_residual <= 1e-8 * ts)
    detail = (f"beta(k=1) maps back to k = {states[0].k:.12g}, jump {states[0].jump_residual:.1e}"
              if states else "no state found")
    rows.append(_row("2d", "modified-solve-roundtrip", ok, detail))
    return rows


def _suite_oracle(ts: float) -> list[CheckRow]:
    rows: list[CheckRow] = []

    prob = Problem1D(a=2.0, beta=0.0, bc=robin(1.0))
    errs = []
    for h in (0.02, 0.01):
        lam = fdgrid.fd_halfline_spectrum(prob, fdgrid.FdConfig(h=h, extent=30.0))[0]
        errs.append(abs(lam + 1.0))
    ratio = errs[0] / errs[1]
    rows.append(_row("oracle", "halfline-order-h2", 3.5 <= ratio <= 4.5,
                     f"error ratio e(h)/e(h/2) = {ratio:.3f}, want within [3.5, 4.5]"))

    lam = fdgrid.fd_halfline_richardson(prob, fdgrid.FdConfig(h=2e-3, extent=30.0))[0]
    tol = 1e-5 * ts
    rows.append(_row("oracle", "robin-free-state", abs(lam + 1.0) <= tol,
                     f"beta=0 ground state {lam:.10f}, want -1 within {tol:.1e}"))

    tol = 1e-3 * ts
    cases = (
        ("dirichlet-fd-agreement", Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)),
        ("neumann-fd-agreement", Problem1D(a=1.0, beta=1.0, bc=NEUMANN)),
    )
    for name, prob in cases:
        exact = halfline.solve_bound_states(prob)[0].eigenvalue
        lam = fdgrid.fd_halfline_richardson(prob, fdgrid.FdConfig(h=4e-3, extent=30.0))[0]
        rel = abs(lam - exact) / abs(exact)
        rows.append(_row("oracle", name, rel <= tol,
                         f"fd {lam:.9f} vs analytic {exact:.9f}, rel {rel:.3e}"))

    prob = Problem1D(a=2.0, beta=1.5, bc=robin(1.0))
    exact = [s.eigenvalue for s in halfline.solve_bound_states(prob)]
    lams = fdgrid.fd_halfline_richardson(prob, fdgrid.FdConfig(h=4e-3, extent=30.0), count=2)
    rels = [abs(l - e) / abs(e) for l, e in zip(sorted(lams), sorted(exact))]
    rows.append(_row("oracle", "robin-fd-both-branches",
                     len(exact) == 2 and max(rels) <= tol,
                     f"both analytic branches confirmed, worst rel {max(rels):.3e}"))

    lam = fdgrid.fd_halfline_spectrum(
        Problem1D(a=1.0, beta=0.5, bc=DIRICHLET), fdgrid.FdConfig(h=2e-3, extent=60.0))[0]
    rows.append(_row("oracle", "dirichlet-below-threshold", lam >= -1e-6,
                     f"beta=0.5 < beta_cr=1: smallest fd eigenvalue {lam:.3e}, want >= -1e-6"))

    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    exact = halfline.solve_bound_states(prob)[0].eigenvalue
    pairs = fdgrid.narrow_well_convergence(prob, widths=(0.1, 0.05), extent=30.0)
    errs = [abs(lam - exact) / abs(exact) for _, lam in pairs]
    rows.append(_row("oracle", "narrow-well-converges", errs[1] < errs[0],
                     f"rel errors {errs[0]:.4f} -> {errs[1]:.4f} as width halves"))
    rows.append(_info("oracle", "narrow-well-final-error",
                      f"width 0.05 still differs from the point limit by rel {errs[1]:.3e}; "
                      "the gap shrinks linearly with width"))

    lam = fdgrid.fd_radial_spectrum(
        Problem2D(a=1.0, beta=0.0), fdgrid.FdConfig(h=5e-3, extent=8.0))[0]
    rows.append(_row("oracle", "radial-free-nonnegative", lam >= -1e-8,
                     f"beta=0 smallest radial eigenvalue {lam:.3e}, want >= -1e-8"))

    beta = radial.beta_of_k(1.0, 1.0, InteriorBasis.IK)
    prob2 = Problem2D(a=1.0, beta=beta, mode=InteriorBasis.IK)
    near = fdgrid.fd_radial_spectrum(prob2, fdgrid.FdConfig(h=5e-3, extent=16.0))[0]
    far = fdgrid.fd_radial_spectrum(prob2, fdgrid.FdConfig(h=5e-3, extent=24.0))[0]
    rows.append(_row("oracle", "radial-truncation-settled", abs(near - far) <= 1e-8,
                     f"|lambda(R=16) - lambda(R=24)| = {abs(near - far):.3e}, want <= 1e-8"))

    rows.append(_arbitration_row(ts))
    return rows


def _fd_negatives(beta: float, config: fdgrid.FdConfig, count: int) -> list[float]:
    prob = Problem2D(a=1.0, beta=beta, mode=InteriorBasis.IK)
    lams = fdgrid.fd_radial_richardson(prob, config, count=count)
    return [lam for lam in lams if lam < -1e-6]


def _mode_negatives(beta: float, mode: InteriorBasis) -> list[float]:
    states = radial.solve_bound_states_2d(Problem2D(a=1.0, beta=beta, mode=mode))
    return sorted(s.eigenvalue for s in states if s.converged)


def _matches(analytic: list[float], fd: list[float], tol: float) -> bool:
    if len(analytic) != len(fd):
        return False
    return all(abs(a - f) <= tol * abs(f) for a, f in zip(analytic, sorted(fd)))


def _arbitration_row(ts: float) -> CheckRow:
    """Let the oracle pick the interior basis both closed forms claim to be.

    Probe couplings: the unit-log-derivative value at k=1 (a regime where the
    two bases disagree about existence) and the modified-interior value at k=1
    (both spectra nonempty, eigenvalues comparable).  A basis survives if it
    agrees with the oracle spectrum at both probes to relative 1e-2.
    """
    tol = 1e-2 * ts
    probes = (
        (radial.beta_of_k(1.0, 1.0, InteriorBasis.UNIT_G),
         fdgrid.FdConfig(h=2e-3, extent=30.0), 1),
        (radial.beta_of_k(1.0, 1.0, InteriorBasis.IK),
         fdgrid.FdConfig(h=2e-3, extent=26.0), 2),
    )
    survivors = {InteriorBasis.JY.value: True, InteriorBasis.IK.value: True}
    notes = []
    for beta, config, count in probes:
        fd = _fd_negatives(beta, config, count)
        for mode in (InteriorBasis.JY, InteriorBasis.IK):
            analytic = _mode_negatives(beta, mode)
            if not _matches(analytic, fd, tol):
                survivors[mode.value] = False
        fd_text = ", ".join(f"{v:.6f}" for v in fd) if fd else "none"
        notes.append(f"beta={beta:.6f}: oracle negatives [{fd_text}]")
    winners = [name for name, alive in survivors.items() if alive]
    ok = winners == [InteriorBasis.IK.value]
    if ok:
        verdict = "the oracle selects the modified interior basis"
    else:
        verdict = f"surviving bases: {winners or 'none'}"
    return _row("oracle", "interior-basis-arbitration", ok,
                verdict + "; " + "; ".join(notes))


_SUITES: dict[str, Callable[[float], list[CheckRow]]] = {
    "specfun": _suite_specfun,
    "1d": _suite_1d,
    "2d": _suite_2d,
    "oracle": _suite_oracle,
}


def run(
    suites: Optional[Sequence[str]] = None,
    tol_scale: float = 1.0,
) -> tuple[list[CheckRow], dict]:
    """Run the selected suites; returns (rows, meta) with meta["ok"] overall."""
    if not tol_scale > 0.0:
        raise ValueError("tol_scale must be positive")
    if suites is None:
        selected = list(SUITE_NAMES)
    else:
        for name in suites:
            if name not in SUITE_NAMES and name != "all":
                raise ValueError(f"unknown suite {name!r}")
        if "all" in suites:
            selected = list(SUITE_NAMES)
        else:
            selected = [name for name in SUITE_NAMES if name in suites]
    rows: list[CheckRow] = []
    for name in selected:
        rows.extend(_SUITES[name](tol_scale))
    counts = {
        "pass": sum(r.status == "PASS" for r in rows),
        "fail": sum(r.status == "FAIL" for r in rows),
        "info": sum(r.status == "INFO" for r in rows),
    }
    meta = {
        "suites": selected,
        "tol_scale": tol_scale,
        "counts": counts,
        "ok": counts["fail"] == 0,
    }
    return rows, meta
