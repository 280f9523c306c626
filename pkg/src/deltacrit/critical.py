"""Critical coupling: the threshold beta below which no bound state exists.

Three methods, tagged on the result: the 1D Dirichlet closed form 1/a, a
bisection on the existence predicate "solve_bound_states is nonempty" (used
for every 1D condition; thresholds at zero are declared when a state already
exists at beta = 1e-12), and a curve-infimum method for the 2D shell, where
the coupling-versus-wavenumber curve beta(k) is evaluated on a grid and its
k -> 0 limit extrapolated through the slow logarithmic tail.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Sequence, Union

from .bessel import DomainError, EULER_GAMMA
from .halfline import BcKind, Problem1D, solve_bound_states
from .radial import InteriorBasis, Problem2D, beta_of_k

ZERO_PROBE = 1e-12
_DOUBLING_CAP = 2.0 ** 40


class Method(enum.Enum):
    ANALYTIC_DIRICHLET_1D = "AnalyticDirichlet1D"
    EXISTENCE_BISECTION = "ExistenceBisection"
    CURVE_INFIMUM = "CurveInfimum"


@dataclass(frozen=True)
class CriticalResult:
    """beta_cr with its enclosing bracket; residual is the bracket width for
    bisection results and the extrapolation-consistency estimate for the
    curve-infimum method.  A NaN beta_cr with a finite bracket signals a
    non-monotone coupling curve (bracket-only outcome)."""

    beta_cr: float
    bracket: tuple[float, float]
    method: Method
    iterations: int
    residual: float


@dataclass(frozen=True)
class SweepRow:
    a: float
    beta_cr: float
    method: str
    check: float
    error: str = ""


def beta_cr_analytic_dirichlet_1d(a: float) -> float:
    """Closed form 1/a for the Dirichlet half-line threshold."""
    if not a > 0.0:
        raise DomainError("a must be positive")
    return 1.0 / a


def beta_cr_search(
    problem: Union[Problem1D, Problem2D], tol: float = 1e-10
) -> CriticalResult:
    """Locate beta_cr for the problem family with beta treated as free.

    1D: existence bisection with an upper bracket found by doubling from 1
    (giving up past 2**40).  2D: infimum of the beta_of_k curve.
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if isinstance(problem, Problem2D):
        return _curve_infimum_2d(problem, tol)

    def exists(beta: float) -> bool:
        return bool(solve_bound_states(replace(problem, beta=beta)))

    iterations = 1
    if exists(ZERO_PROBE):
        return CriticalResult(
            beta_cr=0.0,
            bracket=(0.0, ZERO_PROBE),
            method=Method.EXISTENCE_BISECTION,
            iterations=iterations,
            residual=ZERO_PROBE,
        )
    false_probes = [ZERO_PROBE]
    true_probes: list[float] = []
    lo, hi = ZERO_PROBE, 1.0
    while not exists(hi):
        false_probes.append(hi)
        lo, hi = hi, 2.0 * hi
        iterations += 1
        if hi > _DOUBLING_CAP:
            raise RuntimeError("no bound state found up to beta = 2**40; no threshold")
    true_probes.append(hi)
    iterations += 1
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        iterations += 1
        if exists(mid):
            true_probes.append(mid)
            hi = mid
        else:
            false_probes.append(mid)
            lo = mid
    if max(false_probes) >= min(true_probes):
        # existence flipped more than once along the probes: bracket only
        return CriticalResult(
            beta_cr=math.nan,
            bracket=(lo, hi),
            method=Method.EXISTENCE_BISECTION,
            iterations=iterations,
            residual=math.nan,
        )
    return CriticalResult(
        beta_cr=0.5 * (lo + hi),
        bracket=(lo, hi),
        method=Method.EXISTENCE_BISECTION,
        iterations=iterations,
        residual=hi - lo,
    )


def _curve_infimum_2d(problem: Problem2D, tol: float) -> CriticalResult:
    """Infimum of beta_of_k over k, extrapolated to k -> 0.

    For the IK route the small-k expansion is
        beta(k) = 1/(b*ln b) + (1/b)/L(k) + O(k**2),  L(k) = ln(2/(k*b)) - gamma,
    so a two-point fit in 1/L removes the logarithmic tail; the difference
    between the fits on (k1, k2) and (k2, k3) bounds the extrapolation error.
    A curve that decreases anywhere on the scan grid (the oscillatory JY
    route) yields a bracket-only result with beta_cr = NaN.
    """
    a, mode = problem.a, problem.mode
    b = 1.0 + a

    grid = [10.0 ** (-6.0 + 8.0 * i / 47.0) for i in range(48)]
    values = []
    for k in grid:
        v = beta_of_k(k, a, mode)
        if not math.isfinite(v):
            return CriticalResult(
                beta_cr=math.nan,
                bracket=(0.0, min((x for x in values if x > 0.0), default=math.inf)),
                method=Method.CURVE_INFIMUM,
                iterations=len(values) + 1,
                residual=math.nan,
            )
        values.append(v)
    monotone = all(values[i] < values[i + 1] for i in range(len(values) - 1))
    if not monotone or mode is InteriorBasis.JY:
        # no single threshold certified; report the best grid bound only
        return CriticalResult(
            beta_cr=math.nan,
            bracket=(0.0, min((x for x in values if x > 0.0), default=math.inf)),
            method=Method.CURVE_INFIMUM,
            iterations=len(grid),
            residual=math.nan,
        )

    if mode is InteriorBasis.UNIT_G:
        # beta = k*(K1(kb)/K0(kb) - 1) -> 0 as k -> 0: threshold at zero
        return CriticalResult(
            beta_cr=0.0,
            bracket=(0.0, values[0]),
            method=Method.CURVE_INFIMUM,
            iterations=len(grid),
            residual=values[0],
        )

    def big_l(k: float) -> float:
        return math.log(2.0 / (k * b)) - EULER_GAMMA

    anchors = (1e-6, 1e-5, 1e-4)
    betas = [beta_of_k(k, a, mode) for k in anchors]
    ls = [big_l(k) for k in anchors]

    def fit(i: int, j: int) -> float:
        c = (betas[i] - betas[j]) / (1.0 / ls[i] - 1.0 / ls[j])
        return betas[i] - c / ls[i]

    est_near = fit(0, 1)
    est_far = fit(1, 2)
    err = abs(est_near - est_far) + 1e-14
    return CriticalResult(
        beta_cr=est_near,
        bracket=(est_near - err, min(est_near + err, values[0])),
        method=Method.CURVE_INFIMUM,
        iterations=len(grid) + len(anchors),
        residual=err,
    )


def beta_cr_sweep(
    a_values: Sequence[float],
    template: Union[Problem1D, Problem2D],
    tol: float = 1e-9,
) -> list[SweepRow]:
    """One threshold per a, rows in input order, failures flagged per row.

    The check column restates the relevant closed form near 1: a*beta_cr for
    Dirichlet 1D, beta_cr*(1+a)*ln(1+a) for the 2D IK route, and beta_cr
    itself otherwise.  The bisection tolerance is tol/a so the check column
    carries uniform accuracy across decades of a.
    """
    if not a_values:
        raise ValueError("a_values must be nonempty")
    rows = []
    for a in a_values:
        try:
            prob = replace(template, a=a)
            row_tol = tol / a if isinstance(prob, Problem1D) else tol
            res = beta_cr_search(prob, tol=row_tol)
            if isinstance(prob, Problem1D) and prob.bc.kind is BcKind.DIRICHLET:
                check = a * res.beta_cr
            elif isinstance(prob, Problem2D) and prob.mode is InteriorBasis.IK:
                check = res.beta_cr * (1.0 + a) * math.log(1.0 + a)
            else:
                check = res.beta_cr
            rows.append(SweepRow(a=a, beta_cr=res.beta_cr, method=res.method.value, check=check))
        except (ValueError, RuntimeError) as exc:
            rows.append(
                SweepRow(a=a, beta_cr=math.nan, method="", check=math.nan, error=str(exc))
            )
    return rows
