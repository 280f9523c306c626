"""Radial delta shell outside the unit disk.

The operator is -Laplace - beta*delta(r - b) on r >= 1 with y(1) = 0, shell
radius b = 1 + a, restricted to the rotationally symmetric mode.  Outside the
shell the decaying solution is K0(k*r); inside, two bases are implemented:

  * JY: J0/Y0 combination vanishing at r = 1, exactly as the source equations
    print it.  These solve y'' + y'/r = -k**2 y, not the -k**2-eigenvalue
    equation, so this basis is kept as the faithful-reproduction route.
  * IK: I0/K0 combination vanishing at r = 1, the decaying-equation analogue.
    The finite-difference oracle arbitrates between the two (see fdgrid).

Both interior log-derivative terms are reported in the convention where the
curve tends to -1 for large k*b; the secular equation for a basis restores the
sign it needs.  A third route, UNIT_G, shortcuts the interior term to the
constant -1 that the JY curve empirically hugs.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import bessel
from .halfline import BoundState, PiecewiseEigenfunction
from .numerics import find_roots

_RESIDUAL_TOL = 1e-12


class InteriorBasis(enum.Enum):
    """Interior-solution route; values are the CLI mode tokens."""

    JY = "paper"
    UNIT_G = "paper-eq13"
    IK = "modified"


@dataclass(frozen=True)
class Problem2D:
    a: float
    beta: float
    mode: InteriorBasis = InteriorBasis.IK

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and self.a > 0.0):
            raise ValueError("shell offset a must be positive")
        if not (math.isfinite(self.beta) and self.beta >= 0.0):
            raise ValueError("coupling beta must be nonnegative")

    @property
    def b(self) -> float:
        return 1.0 + self.a


def g_eval(k: float, a: float, basis: InteriorBasis) -> float:
    """Interior log-derivative term g(k, a) of the chosen basis.

    JY:  [-Y0(k)J1(kb) + J0(k)Y1(kb)] / [Y0(k)J0(kb) - J0(k)Y0(kb)], which
    oscillates and has poles at the zeros of the denominator (reported as
    +/-inf, never raised).
    IK:  -[K0(k)I1(kb) + I0(k)K1(kb)] / [K0(k)I0(kb) - I0(k)K0(kb)], computed
    from scaled Bessel forms so k*b in the hundreds stays finite; the
    denominator is positive for all k > 0, b > 1, so this branch is pole-free
    and tends to -1 as k*b grows.
    """
    if not k > 0.0 or not a > 0.0:
        raise ValueError("k and a must be positive")
    b = 1.0 + a
    if basis is InteriorBasis.JY:
        y0k = bessel.y0(k)
        j0k = bessel.j0(k)
        num = -y0k * bessel.j1(k * b) + j0k * bessel.y1(k * b)
        den = y0k * bessel.j0(k * b) - j0k * bessel.y0(k * b)
        if den == 0.0:
            return math.copysign(math.inf, num)
        return num / den
    if basis is InteriorBasis.IK:
        decay2 = math.exp(-2.0 * k * a)
        k0k = bessel.k0e(k)
        i0k = bessel.i0e(k)
        num = k0k * bessel.i1e(k * b) + i0k * bessel.k1e(k * b) * decay2
        den = k0k * bessel.i0e(k * b) - i0k * bessel.k0e(k * b) * decay2
        return -num / den
    raise ValueError("g is defined for the JY and IK bases only")


def beta_of_k(k: float, a: float, mode: InteriorBasis) -> float:
    """The coupling that places a bound state at wavenumber k.

    All three routes share the outer term k*K1(kb)/K0(kb); they differ in the
    interior contribution: exact JY g, the constant -1 shortcut, or the IK
    term.  Poles of the JY g propagate as +/-inf.
    """
    if not k > 0.0 or not a > 0.0:
        raise ValueError("k and a must be positive")
    b = 1.0 + a
    outer = bessel.k1k0_ratio(k * b)
    if mode is InteriorBasis.UNIT_G:
        return k * (outer - 1.0)
    g = g_eval(k, a, mode)
    if mode is InteriorBasis.JY:
        return k * (g + outer) if math.isfinite(g) else g
    return k * (outer - g)


def beta_window(k: float, a: float) -> tuple[float, float]:
    """Pinching window for the UNIT_G coupling curve.

    Substituting the K1/K0 ratio bounds into beta = k*(K1(kb)/K0(kb) - 1)
    gives (k/(2*(k*(a+1) + 1/4)), k/(2*k*(a+1))); the upper end is below 1/2
    for every a > 0.
    """
    if not k > 0.0 or not a > 0.0:
        raise ValueError("k and a must be positive")
    return k / (2.0 * (k * (a + 1.0) + 0.25)), k / (2.0 * k * (a + 1.0))


def solve_bound_states_2d(problem: Problem2D) -> list[BoundState]:
    """All k with beta_of_k(k) = beta on (1e-6, max(10*beta*b, 10)).

    Pole intervals of the JY route are excluded by the root finder's pole
    classification.  For the IK route the curve is positive and increasing, so
    at most one state comes back and beta below the curve's small-k infimum
    yields an empty list.
    """
    a, beta, mode = problem.a, problem.beta, problem.mode
    k_max = max(10.0 * beta * (1.0 + a), 10.0)
    roots = find_roots(
        lambda k: beta_of_k(k, a, mode) - beta,
        (1e-6, k_max),
        tol=_RESIDUAL_TOL,
    )
    states = []
    for r in roots:
        if mode is InteriorBasis.UNIT_G:
            jump = abs(beta_of_k(r.root, a, mode) - beta)
        else:
            eigfn = eigenfunction_2d_from_k(r.root, problem)
            jump = _jump_residual_2d(eigfn, beta)
        states.append(
            BoundState(
                k=r.root,
                eigenvalue=-(r.root * r.root),
                dispersion_residual=r.residual,
                jump_residual=jump,
                converged=r.converged,
            )
        )
    return states


def _jump_residual_2d(eigfn: PiecewiseEigenfunction, beta: float) -> float:
    b = eigfn.breakpoint
    jump = eigfn.outer_derivative(b) - eigfn.inner_derivative(b)
    return abs(-jump - beta * eigfn.evaluate(b))


def eigenfunction_2d_from_k(k: float, problem: Problem2D) -> PiecewiseEigenfunction:
    """Two-region radial eigenfunction with y(1) = 0 and y(b) = 1.

    Region II is K0(kr)/K0(kb) in scaled form.  Region I depends on the basis;
    the UNIT_G shortcut has no interior closed form and is rejected.
    """
    if not k > 0.0:
        raise ValueError("k must be positive")
    a = problem.a
    b = problem.b
    mode = problem.mode

    k0e_b = bessel.k0e(k * b)

    def outer(r: float) -> float:
        return bessel.k0e(k * r) / k0e_b * math.exp(-k * (r - b))

    def outer_d(r: float) -> float:
        return -k * bessel.k1e(k * r) / k0e_b * math.exp(-k * (r - b))

    if mode is InteriorBasis.JY:
        region1 = "(Y0(k)*J0(k*r) - J0(k)*Y0(k*r))/(Y0(k)*J0(k*b) - J0(k)*Y0(k*b))"
        y0k = bessel.y0(k)
        j0k = bessel.j0(k)
        den = y0k * bessel.j0(k * b) - j0k * bessel.y0(k * b)
        if den == 0.0:
            raise ValueError("degenerate interior normalization: denominator vanishes at r = b")

        def inner(r: float) -> float:
            return (y0k * bessel.j0(k * r) - j0k * bessel.y0(k * r)) / den

        def inner_d(r: float) -> float:
            return k * (-y0k * bessel.j1(k * r) + j0k * bessel.y1(k * r)) / den

    elif mode is InteriorBasis.IK:
        region1 = "(K0(k)*I0(k*r) - I0(k)*K0(k*r))/(K0(k)*I0(k*b) - I0(k)*K0(k*b))"
        k0k = bessel.k0e(k)
        i0k = bessel.i0e(k)
        den = k0k * bessel.i0e(k * b) - i0k * bessel.k0e(k * b) * math.exp(-2.0 * k * a)

        def inner(r: float) -> float:
            scale = math.exp(-2.0 * k * (r - 1.0))
            num = k0k * bessel.i0e(k * r) - i0k * bessel.k0e(k * r) * scale
            return math.exp(k * (r - b)) * num / den

        def inner_d(r: float) -> float:
            scale = math.exp(-2.0 * k * (r - 1.0))
            num = k0k * bessel.i1e(k * r) + i0k * bessel.k1e(k * r) * scale
            return k * math.exp(k * (r - b)) * num / den

    else:
        raise ValueError("the UNIT_G shortcut has no interior closed form")

    def evaluate(r: float) -> float:
        if r < 1.0:
            raise ValueError("eigenfunction domain is r >= 1")
        return inner(r) if r < b else outer(r)

    return PiecewiseEigenfunction(
        breakpoint=b,
        region1=region1,
        region2="K0(k*r)/K0(k*b)",
        evaluate=evaluate,
        inner_derivative=inner_d,
        outer_derivative=outer_d,
    )


def eigenfunction_2d(state: BoundState, problem: Problem2D) -> PiecewiseEigenfunction:
    return eigenfunction_2d_from_k(state.k, problem)
