"""Finite-difference oracle: discretization order, delta handling, truncation."""

import math

import pytest

from deltacrit import fdgrid, halfline, radial
from deltacrit.fdgrid import FdConfig
from deltacrit.halfline import DIRICHLET, NEUMANN, Problem1D, robin
from deltacrit.radial import InteriorBasis, Problem2D


def test_config_validation():
    with pytest.raises(ValueError):
        FdConfig(h=0.0, extent=10.0)
    with pytest.raises(ValueError):
        FdConfig(h=-0.1, extent=10.0)
    with pytest.raises(ValueError):
        FdConfig(h=1.0, extent=0.5)
    with pytest.raises(ValueError):
        FdConfig(h=0.01, extent=10.0, well_width=0.0)


def test_second_order_convergence_robin_free():
    # beta=0, sigma=1 has the exact ground state e^{-x}, lambda = -1
    prob = Problem1D(a=2.0, beta=0.0, bc=robin(1.0))
    errs = []
    for h in (0.02, 0.01, 0.005):
        lam = fdgrid.fd_halfline_spectrum(prob, FdConfig(h=h, extent=30.0))[0]
        errs.append(abs(lam + 1.0))
    assert 3.5 <= errs[0] / errs[1] <= 4.5
    assert 3.5 <= errs[1] / errs[2] <= 4.5


def test_second_order_convergence_dirichlet_delta():
    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    exact = halfline.solve_bound_states(prob)[0].eigenvalue
    errs = []
    for h in (0.02, 0.01, 0.005):
        lam = fdgrid.fd_halfline_spectrum(prob, FdConfig(h=h, extent=30.0))[0]
        errs.append(abs(lam - exact))
    assert 3.5 <= errs[0] / errs[1] <= 4.5
    assert 3.5 <= errs[1] / errs[2] <= 4.5


def test_richardson_beats_plain_grid():
    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    exact = halfline.solve_bound_states(prob)[0].eigenvalue
    cfg = FdConfig(h=0.01, extent=30.0)
    plain = fdgrid.fd_halfline_spectrum(prob, FdConfig(h=0.005, extent=30.0))[0]
    extrap = fdgrid.fd_halfline_richardson(prob, cfg)[0]
    assert abs(extrap - exact) < abs(plain - exact)
    assert abs(extrap - exact) / abs(exact) < 1e-5


def test_all_three_boundary_conditions_agree_with_analytic():
    cases = (
        Problem1D(a=1.0, beta=3.0, bc=DIRICHLET),
        Problem1D(a=1.0, beta=1.0, bc=NEUMANN),
        Problem1D(a=2.0, beta=1.5, bc=robin(1.0)),
    )
    for prob in cases:
        states = halfline.solve_bound_states(prob)
        lams = fdgrid.fd_halfline_richardson(
            prob, FdConfig(h=4e-3, extent=30.0), count=len(states)
        )
        for got, want in zip(sorted(lams), sorted(s.eigenvalue for s in states)):
            assert got == pytest.approx(want, rel=1e-3)


def test_neumann_free_has_no_bound_state():
    lam = fdgrid.fd_halfline_spectrum(
        Problem1D(a=1.0, beta=0.0, bc=NEUMANN), FdConfig(h=0.01, extent=40.0)
    )[0]
    assert lam >= -1e-8


def test_grid_step_aligns_to_delta():
    # the step is snapped so the shell lands exactly on a node
    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    for h_req in (0.0041, 0.003, 0.00777):
        lam = fdgrid.fd_halfline_spectrum(prob, FdConfig(h=h_req, extent=20.0))[0]
        assert math.isfinite(lam) and lam < -1.9


def test_narrow_well_marches_toward_point_limit():
    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    exact = halfline.solve_bound_states(prob)[0].eigenvalue
    rows = fdgrid.narrow_well_convergence(prob, widths=(0.2, 0.1, 0.05), extent=30.0)
    errs = [abs(lam - exact) for _, lam in rows]
    assert errs[0] > errs[1] > errs[2]
    # the approach is first order in the width: halving w roughly halves the gap
    assert 1.5 <= errs[0] / errs[1] <= 2.5
    assert 1.5 <= errs[1] / errs[2] <= 2.5


def test_narrow_well_validation():
    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    with pytest.raises(ValueError):
        fdgrid.narrow_well_convergence(prob, widths=(0.1, 0.2), extent=30.0)
    with pytest.raises(ValueError):
        fdgrid.narrow_well_convergence(prob, widths=(), extent=30.0)
    # well must stay inside the grid and resolvable: width below 2h rejected
    with pytest.raises(ValueError):
        fdgrid.fd_halfline_spectrum(
            prob, FdConfig(h=0.01, extent=20.0, well_width=0.01)
        )


def test_radial_free_spectrum_nonnegative():
    lam = fdgrid.fd_radial_spectrum(
        Problem2D(a=1.0, beta=0.0), FdConfig(h=5e-3, extent=8.0)
    )[0]
    assert lam >= -1e-8


def test_radial_matches_modified_interior_root():
    beta = radial.beta_of_k(1.0, 1.0, InteriorBasis.IK)
    prob = Problem2D(a=1.0, beta=beta, mode=InteriorBasis.IK)
    lam = fdgrid.fd_radial_richardson(prob, FdConfig(h=4e-3, extent=20.0))[0]
    assert lam == pytest.approx(-1.0, rel=1e-4)


def test_radial_truncation_independence():
    beta = radial.beta_of_k(1.0, 1.0, InteriorBasis.IK)
    prob = Problem2D(a=1.0, beta=beta)
    near = fdgrid.fd_radial_spectrum(prob, FdConfig(h=5e-3, extent=16.0))[0]
    far = fdgrid.fd_radial_spectrum(prob, FdConfig(h=5e-3, extent=24.0))[0]
    assert abs(near - far) <= 1e-8


def test_radial_rejects_well_width():
    with pytest.raises(ValueError):
        fdgrid.fd_radial_spectrum(
            Problem2D(a=1.0, beta=1.0), FdConfig(h=0.01, extent=10.0, well_width=0.1)
        )


def test_halfline_truncation_independence():
    prob = Problem1D(a=1.0, beta=3.0, bc=DIRICHLET)
    near = fdgrid.fd_halfline_spectrum(prob, FdConfig(h=0.005, extent=25.0))[0]
    far = fdgrid.fd_halfline_spectrum(prob, FdConfig(h=0.005, extent=40.0))[0]
    assert abs(near - far) <= 1e-8
