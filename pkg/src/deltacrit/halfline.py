"""Half-line Schrodinger problems with a single attractive delta well.

The operator is -y'' - beta*delta(x - a) on x >= 0 with a Dirichlet, Neumann,
or Robin condition at the origin.  A bound state at energy lambda = -k**2
exists exactly when the matching function

    F(k) = k + (inner log-derivative of the decaying solution at a)

equals beta; F is built per boundary condition from hyperbolic closed forms.
This module solves that dispersion equation, exposes the equivalent
dimensionless reduced forms for Dirichlet/Neumann, and constructs the
two-region eigenfunctions together with their derivative-jump check.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable

from .bessel import DomainError
from .numerics import find_roots

_RESIDUAL_TOL = 1e-12


class BcKind(enum.Enum):
    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"
    ROBIN = "robin"


@dataclass(frozen=True)
class BoundaryCondition:
    """Condition at x = 0: y = 0, y' = 0, or y' + sigma*y = 0."""

    kind: BcKind
    sigma: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.sigma):
            raise ValueError("sigma must be finite")
        if self.kind is BcKind.ROBIN and self.sigma <= 0.0:
            raise ValueError("Robin sigma must be positive")


DIRICHLET = BoundaryCondition(BcKind.DIRICHLET)
NEUMANN = BoundaryCondition(BcKind.NEUMANN)


def robin(sigma: float = 1.0) -> BoundaryCondition:
    return BoundaryCondition(BcKind.ROBIN, sigma)


@dataclass(frozen=True)
class Problem1D:
    a: float
    beta: float
    bc: BoundaryCondition

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError("well location a must be positive")
        if not (math.isfinite(self.beta) and self.beta >= 0.0):
            raise ValueError("coupling beta must be nonnegative")


@dataclass(frozen=True)
class ReducedForm:
    """Dimensionless variables z = 2*k*a and B = beta*a."""

    z: float
    B: float

    def __post_init__(self) -> None:
        if not self.z > 0.0:
            raise ValueError("z must be positive")
        if not self.B >= 0.0:
            raise ValueError("B must be nonnegative")


@dataclass(frozen=True)
class BoundState:
    """One solved bound state; eigenvalue is stored as -k**2 redundantly."""

    k: float
    eigenvalue: float
    dispersion_residual: float
    jump_residual: float
    converged: bool = True

    def __post_init__(self) -> None:
        if self.eigenvalue != -(self.k * self.k):
            raise ValueError("eigenvalue must equal -k**2")


@dataclass(frozen=True)
class PiecewiseEigenfunction:
    """Two-region closed form, normalized to 1 at the matching point.

    `inner_derivative` / `outer_derivative` are the one-sided derivatives valid
    on [0, breakpoint] and [breakpoint, inf) respectively; `derivative` takes
    the outer side at the breakpoint itself.
    """

    breakpoint: float
    region1: str
    region2: str
    evaluate: Callable[[float], float]
    inner_derivative: Callable[[float], float]
    outer_derivative: Callable[[float], float]

    def derivative(self, x: float) -> float:
        if x < self.breakpoint:
            return self.inner_derivative(x)
        return self.outer_derivative(x)


def _coth(x: float) -> float:
    # expm1 keeps full relative accuracy down to x ~ 1e-300 and avoids the
    # tanh(x) -> 1 saturation; beyond 350 the correction underflows anyway.
    if x > 350.0:
        return 1.0
    return 1.0 + 2.0 / math.expm1(2.0 * x)


def dispersion_value(k: float, problem: Problem1D) -> float:
    """The matching function F(k); equals beta exactly at a bound state.

    Dirichlet: F = k + k*coth(k*a); Neumann: F = k + k*tanh(k*a);
    Robin(sigma): F = k + k*(k - sigma*coth(k*a)) / (k*coth(k*a) - sigma),
    which has a simple pole where k*coth(k*a) = sigma (possible only for
    a*sigma > 1).  The pole is reported as +inf, never raised.
    """
    if not k > 0.0:
        raise ValueError("k must be positive")
    a = problem.a
    kind = problem.bc.kind
    if kind is BcKind.DIRICHLET:
        return k + k * _coth(k * a)
    if kind is BcKind.NEUMANN:
        return k + k * math.tanh(k * a)
    sigma = problem.bc.sigma
    c = _coth(k * a)
    den = k * c - sigma
    if den == 0.0:
        return math.inf
    return k + k * (k - sigma * c) / den


def dispersion_residual(k: float, problem: Problem1D) -> float:
    """F(k) - beta; +inf at the Robin pole."""
    value = dispersion_value(k, problem)
    if math.isinf(value):
        return value
    return value - problem.beta


def reduced_residual(form: ReducedForm, bc_kind: BcKind) -> float:
    """Residual of the dimensionless dispersion form.

    Dirichlet: exp(-z) - (1 - z/B); Neumann: exp(-z) - (z/B - 1).  Roots map
    to dispersion roots under z = 2*k*a, B = beta*a.
    """
    if form.B == 0.0:
        raise DomainError("reduced form needs B > 0 (division by B)")
    decay = math.exp(-form.z)
    if bc_kind is BcKind.DIRICHLET:
        return decay - (1.0 - form.z / form.B)
    if bc_kind is BcKind.NEUMANN:
        return decay - (form.z / form.B - 1.0)
    raise ValueError("reduced form exists for Dirichlet and Neumann only")


def scan_k_max(problem: Problem1D) -> float:
    """Upper end of the root scan: max(10*beta, 10/a, 10), plus 10*sigma for
    Robin so the beta = 0 state at k = sigma stays inside the interval."""
    k_max = max(10.0 * problem.beta, 10.0 / problem.a, 10.0)
    if problem.bc.kind is BcKind.ROBIN:
        k_max = max(k_max, 10.0 * problem.bc.sigma)
    return k_max


def eigenfunction_from_k(k: float, problem: Problem1D) -> PiecewiseEigenfunction:
    """Closed-form eigenfunction for wavenumber k, normalized to y(a) = 1.

    Inner forms are evaluated as exp-ratio expressions so arbitrarily large
    k*a neither overflows nor loses the boundary behavior.
    """
    if not k > 0.0:
        raise ValueError("k must be positive")
    a = problem.a
    kind = problem.bc.kind
    ea = math.exp(-2.0 * k * a)

    if kind is BcKind.DIRICHLET:
        region1 = "sinh(k*x)/sinh(k*a)"
        den = 1.0 - ea

        def inner(x: float) -> float:
            return math.exp(k * (x - a)) * (1.0 - math.exp(-2.0 * k * x)) / den

        def inner_d(x: float) -> float:
            return k * math.exp(k * (x - a)) * (1.0 + math.exp(-2.0 * k * x)) / den

    elif kind is BcKind.NEUMANN:
        region1 = "cosh(k*x)/cosh(k*a)"
        den = 1.0 + ea

        def inner(x: float) -> float:
            return math.exp(k * (x - a)) * (1.0 + math.exp(-2.0 * k * x)) / den

        def inner_d(x: float) -> float:
            return k * math.exp(k * (x - a)) * (1.0 - math.exp(-2.0 * k * x)) / den

    else:
        sigma = problem.bc.sigma
        region1 = "(k*cosh(k*x) - sigma*sinh(k*x))/(k*cosh(k*a) - sigma*sinh(k*a))"
        den = (k - sigma) + (k + sigma) * ea
        if den == 0.0:
            raise ValueError("degenerate normalization: inner amplitude vanishes at x = a")

        def inner(x: float) -> float:
            return math.exp(k * (x - a)) * ((k - sigma) + (k + sigma) * math.exp(-2.0 * k * x)) / den

        def inner_d(x: float) -> float:
            return k * math.exp(k * (x - a)) * ((k - sigma) - (k + sigma) * math.exp(-2.0 * k * x)) / den

    def outer(x: float) -> float:
        return math.exp(k * (a - x))

    def outer_d(x: float) -> float:
        return -k * math.exp(k * (a - x))

    def evaluate(x: float) -> float:
        if x < 0.0:
            raise ValueError("eigenfunction domain is x >= 0")
        return inner(x) if x < a else outer(x)

    return PiecewiseEigenfunction(
        breakpoint=a,
        region1=region1,
        region2="exp(k*(a - x))",
        evaluate=evaluate,
        inner_derivative=inner_d,
        outer_derivative=outer_d,
    )


def eigenfunction(state: BoundState, problem: Problem1D) -> PiecewiseEigenfunction:
    return eigenfunction_from_k(state.k, problem)


def jump_residual(eigfn: PiecewiseEigenfunction, problem: Problem1D) -> float:
    """|-(y'(a+) - y'(a-)) - beta*y(a)| from the one-sided analytic derivatives."""
    x = eigfn.breakpoint
    jump = eigfn.outer_derivative(x) - eigfn.inner_derivative(x)
    return abs(-jump - problem.beta * eigfn.evaluate(x))


def solve_bound_states(problem: Problem1D) -> list[BoundState]:
    """All bound states, ascending in k; empty when none exist.

    Root residuals obey |F(k) - beta| <= 1e-10 and the eigenfunction jump
    check |[y'] + beta*y(a)| <= 1e-8 for converged states; a root the refiner
    could not converge is returned flagged rather than dropped.
    """
    roots = find_roots(
        lambda k: dispersion_residual(k, problem),
        (0.0, scan_k_max(problem)),
        tol=_RESIDUAL_TOL,
    )
    states = []
    for r in roots:
        eigfn = eigenfunction_from_k(r.root, problem)
        states.append(
            BoundState(
                k=r.root,
                eigenvalue=-(r.root * r.root),
                dispersion_residual=r.residual,
                jump_residual=jump_residual(eigfn, problem),
                converged=r.converged,
            )
        )
    return states
