"""Bound states and critical coupling for attractive delta potentials."""

__version__ = "0.1.0"

from .critical import beta_cr_analytic_dirichlet_1d, beta_cr_search, beta_cr_sweep
from .halfline import (
    DIRICHLET,
    NEUMANN,
    BcKind,
    BoundState,
    Problem1D,
    ReducedForm,
    dispersion_residual,
    dispersion_value,
    reduced_residual,
    robin,
    solve_bound_states,
)
from .radial import (
    InteriorBasis,
    Problem2D,
    beta_of_k,
    beta_window,
    g_eval,
    solve_bound_states_2d,
)

__all__ = [
    "__version__",
    "BcKind",
    "BoundState",
    "DIRICHLET",
    "InteriorBasis",
    "NEUMANN",
    "Problem1D",
    "Problem2D",
    "ReducedForm",
    "beta_cr_analytic_dirichlet_1d",
    "beta_cr_search",
    "beta_cr_sweep",
    "beta_of_k",
    "beta_window",
    "dispersion_residual",
    "dispersion_value",
    "g_eval",
    "reduced_residual",
    "robin",
    "solve_bound_states",
    "solve_bound_states_2d",
]
