"""Finite-difference oracle for the half-line and radial shell problems.

Second-order 3-point discretizations, truncated to a finite extent with a far
Dirichlet wall.  The delta well is realized either on-node (a single diagonal
entry -beta/h) or as a narrow rectangular well of depth beta/w whose node
coefficients are cell-overlap fractions, which preserves the integral of the
potential exactly for any alignment.  Boundary rows are symmetrized so the
Sturm solver from `numerics` applies:

  * Neumann/Robin at x = 0: ghost-node elimination plus a half-weight mass at
    node 0, giving diag 2/h**2 - 2*sigma/h and offdiag -sqrt(2)/h**2.
  * radial: the r-weighted operator -(1/r)(r y')' is similarity-transformed by
    sqrt(r_i), giving diag exactly 2/h**2 and offdiag
    -r_{i+1/2}/(h**2*sqrt(r_i*r_{i+1})).

Everything converges at O(h**2) on smooth reference problems; Richardson
pairs (h, h/2) cancel the leading term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .halfline import BcKind, Problem1D
from .numerics import richardson, tridiag_smallest_eigs
from .radial import Problem2D


@dataclass(frozen=True)
class FdConfig:
    """Grid step, truncation extent, and delta realization (None = on-node)."""

    h: float
    extent: float
    well_width: Optional[float] = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.h) and self.h > 0.0):
            raise ValueError("grid step h must be positive")
        if not (math.isfinite(self.extent) and self.extent > self.h):
            raise ValueError("extent must exceed the grid step")
        if self.well_width is not None and not self.well_width > 0.0:
            raise ValueError("well width must be positive")


def _aligned_step(span: float, h: float) -> float:
    """Largest step <= about h that divides span into whole cells."""
    cells = round(span / h)
    if cells < 2:
        raise ValueError(f"step {h} too coarse: need at least 2 cells across {span}")
    return span / cells


def _well_coefficients(
    n: int, h: float, a: float, beta: float, width: Optional[float]
) -> list[float]:
    """Diagonal potential contributions V_i for nodes x_i = i*h, i = 0..n."""
    potential = [0.0] * (n + 1)
    if beta == 0.0:
        return potential
    if width is None:
        j = round(a / h)
        potential[j] = -beta / h
        return potential
    if width < 2.0 * h:
        raise ValueError("narrow well needs width >= 2*h")
    left = a - 0.5 * width
    right = a + 0.5 * width
    if left <= 0.0 or right >= n * h:
        raise ValueError("narrow well must lie strictly inside the grid")
    depth = beta / width
    lo_node = max(0, int(math.floor((left - 0.5 * h) / h)))
    hi_node = min(n, int(math.ceil((right + 0.5 * h) / h)))
    for i in range(lo_node, hi_node + 1):
        cell_lo = (i - 0.5) * h
        cell_hi = (i + 0.5) * h
        overlap = min(cell_hi, right) - max(cell_lo, left)
        if overlap > 0.0:
            potential[i] -= depth * (overlap / h)
    return potential


def _halfline_tridiag(
    problem: Problem1D, h: float, n: int, width: Optional[float]
) -> tuple[list[float], list[float]]:
    inv_h2 = 1.0 / (h * h)
    potential = _well_coefficients(n, h, problem.a, problem.beta, width)
    kind = problem.bc.kind
    if kind is BcKind.DIRICHLET:
        diag = [2.0 * inv_h2 + potential[i] for i in range(1, n)]
        offdiag = [-inv_h2] * (n - 2)
        return diag, offdiag
    sigma = 0.0 if kind is BcKind.NEUMANN else problem.bc.sigma
    diag = [2.0 * inv_h2 - 2.0 * sigma / h + potential[0]]
    diag.extend(2.0 * inv_h2 + potential[i] for i in range(1, n))
    offdiag = [-math.sqrt(2.0) * inv_h2]
    offdiag.extend([-inv_h2] * (n - 2))
    return diag, offdiag


def fd_halfline_spectrum(
    problem: Problem1D, config: FdConfig, count: int = 1
) -> list[float]:
    """The `count` smallest eigenvalues of the discretized half-line operator."""
    if problem.a >= config.extent:
        raise ValueError("extent must exceed the well location")
    h = _aligned_step(problem.a, config.h)
    n = round(config.extent / h)
    diag, offdiag = _halfline_tridiag(problem, h, n, config.well_width)
    return tridiag_smallest_eigs(diag, offdiag, count)


def fd_radial_spectrum(
    problem: Problem2D, config: FdConfig, count: int = 1
) -> list[float]:
    """Smallest eigenvalues of the radial operator on [1, extent].

    Dirichlet at both ends; delta shell on-node at r = 1 + a.  Narrow-well
    handling is 1D-only and rejected here.
    """
    if config.well_width is not None:
        raise ValueError("narrow-well handling is implemented for 1D only")
    b = 1.0 + problem.a
    if b >= config.extent:
        raise ValueError("extent must exceed the shell radius")
    h = _aligned_step(problem.a, config.h)
    n = round((config.extent - 1.0) / h)
    inv_h2 = 1.0 / (h * h)
    j = round(problem.a / h)
    diag = []
    for i in range(1, n):
        v = -problem.beta / h if i == j else 0.0
        diag.append(2.0 * inv_h2 + v)
    offdiag = []
    for i in range(1, n - 1):
        r_i = 1.0 + i * h
        r_next = 1.0 + (i + 1) * h
        r_mid = 0.5 * (r_i + r_next)
        offdiag.append(-r_mid * inv_h2 / math.sqrt(r_i * r_next))
    return tridiag_smallest_eigs(diag, offdiag, count)


def _richardson_pair(values_h: Sequence[float], values_h2: Sequence[float]) -> list[float]:
    paired = min(len(values_h), len(values_h2))
    return [richardson(values_h[i], values_h2[i], 2) for i in range(paired)]


def fd_halfline_richardson(
    problem: Problem1D, config: FdConfig, count: int = 1
) -> list[float]:
    """Eigenvalues extrapolated from the (h, h/2) pair, O(h**2) term removed."""
    h = _aligned_step(problem.a, config.h)
    coarse = fd_halfline_spectrum(problem, replace(config, h=h), count)
    fine = fd_halfline_spectrum(problem, replace(config, h=0.5 * h), count)
    return _richardson_pair(coarse, fine)


def fd_radial_richardson(
    problem: Problem2D, config: FdConfig, count: int = 1
) -> list[float]:
    h = _aligned_step(problem.a, config.h)
    coarse = fd_radial_spectrum(problem, replace(config, h=h), count)
    fine = fd_radial_spectrum(problem, replace(config, h=0.5 * h), count)
    return _richardson_pair(coarse, fine)


def narrow_well_convergence(
    problem: Problem1D,
    widths: Sequence[float],
    extent: float = 40.0,
    nodes_per_width: int = 8,
) -> list[tuple[float, float]]:
    """Smallest eigenvalue per well width, each Richardson-extrapolated.

    The step is tied to the width (h = w / nodes_per_width) so the well edges
    stay aligned as w shrinks; what remains after extrapolation is the
    width-induced error of approximating the delta, which is the quantity a
    convergence study wants isolated.
    """
    if not widths:
        raise ValueError("widths must be nonempty")
    if any(w <= 0.0 for w in widths):
        raise ValueError("widths must be positive")
    if any(widths[i + 1] >= widths[i] for i in range(len(widths) - 1)):
        raise ValueError("widths must be strictly decreasing")
    out = []
    for w in widths:
        config = FdConfig(h=w / nodes_per_width, extent=extent, well_width=w)
        lam = fd_halfline_richardson(problem, config, count=1)[0]
        out.append((w, lam))
    return out
