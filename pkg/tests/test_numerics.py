"""Root finder, tridiagonal eigensolver, and Richardson extrapolation."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltacrit import numerics
from deltacrit.numerics import Bracket, RootResult, find_roots, richardson, tridiag_smallest_eigs


def test_reduced_dirichlet_example():
    # e^{-z} = 1 - z/B at B=2 has exactly one positive root
    roots = find_roots(lambda z: math.exp(-z) - (1.0 - z / 2.0), (1e-9, 30.0))
    assert len(roots) == 1
    assert roots[0].root == pytest.approx(1.5936242600400401, rel=1e-13)
    assert roots[0].converged


def test_saturating_function_has_no_roots():
    # coth(k) - 1 underflows to exactly zero for large k yet never crosses
    roots = find_roots(lambda k: 1.0 / math.tanh(k) - 1.0, (1e-3, 20.0))
    assert roots == []


def test_pole_is_excluded():
    def f(k):
        return k + k * (k - 1.0 / math.tanh(2.0 * k)) / (k / math.tanh(2.0 * k) - 1.0) - 1.5

    roots = find_roots(f, (1e-6, 35.0))
    assert [pytest.approx(r.root, rel=1e-10) for r in roots] == [
        0.3921191172733511,
        1.0680398527841986,
    ]
    # the pole at k*coth(2k) = 1 sits between the roots and is not reported
    assert all(abs(r.root - 0.9575040240772687) > 1e-3 for r in roots)


def test_exact_zero_on_sign_change_is_reported():
    def step(x):
        return 0.0 if x == 1.0 else math.copysign(1.0, x - 1.0)

    roots = find_roots(step, (0.0, 2.0))
    assert len(roots) == 1
    assert roots[0].residual == 0.0


def test_results_ascending_and_truncated():
    f = lambda x: math.sin(x)
    full = find_roots(f, (0.1, 50.0))
    assert [r.root for r in full] == sorted(r.root for r in full)
    assert len(full) == 15
    first3 = find_roots(f, (0.1, 50.0), max_roots=3)
    assert [r.root for r in first3] == [r.root for r in full[:3]]


def test_determinism_is_bitwise():
    def f(k):
        return k + k / math.tanh(k) - 3.0

    a = find_roots(f, (1e-9, 40.0))
    b = find_roots(f, (1e-9, 40.0))
    assert [(r.root, r.residual, r.iterations) for r in a] == [
        (r.root, r.residual, r.iterations) for r in b
    ]


def test_nan_raises():
    with pytest.raises(ValueError):
        find_roots(lambda x: math.nan, (0.0, 1.0))


def test_interval_validation():
    f = lambda x: x
    with pytest.raises(ValueError):
        find_roots(f, (1.0, 1.0))
    with pytest.raises(ValueError):
        find_roots(f, (0.0, math.inf))
    with pytest.raises(ValueError):
        find_roots(f, (0.0, 1.0), tol=0.0)
    with pytest.raises(ValueError):
        find_roots(f, (0.0, 1.0), max_roots=0)


def test_bracket_validation():
    with pytest.raises(ValueError):
        Bracket(1.0, 0.0, -1.0, 1.0)
    with pytest.raises(ValueError):
        Bracket(0.0, 1.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        Bracket(0.0, 1.0, math.inf, -1.0)


@given(
    st.lists(st.floats(min_value=0.5, max_value=9.5), min_size=3, max_size=3).filter(
        lambda rs: min(abs(a - b) for i, a in enumerate(rs) for b in rs[i + 1:]) > 0.5
    )
)
@settings(max_examples=60, deadline=None)
def test_cubic_roots_recovered(roots_in):
    r1, r2, r3 = sorted(roots_in)

    def f(x):
        return (x - r1) * (x - r2) * (x - r3)

    got = find_roots(f, (0.0, 10.0))
    assert len(got) == 3
    for found, want in zip(got, (r1, r2, r3)):
        assert found.root == pytest.approx(want, abs=1e-7)


def test_known_tridiagonal_spectrum():
    # eigenvalues of diag 2 with offdiag -1 (n=3): 2 - sqrt(2), 2, 2 + sqrt(2)
    eigs = tridiag_smallest_eigs([2.0, 2.0, 2.0], [-1.0, -1.0], 3)
    assert eigs[0] == pytest.approx(2.0 - math.sqrt(2.0), abs=1e-12)
    assert eigs[1] == pytest.approx(2.0, abs=1e-12)
    assert eigs[2] == pytest.approx(2.0 + math.sqrt(2.0), abs=1e-12)


def test_against_dense_solver_small_dims():
    rng = np.random.default_rng(20260814)
    for n in range(2, 13):
        d = rng.normal(size=n)
        e = rng.normal(size=n - 1)
        want = np.linalg.eigvalsh(np.diag(d) + np.diag(e, 1) + np.diag(e, -1))
        got = tridiag_smallest_eigs(d.tolist(), e.tolist(), n, abstol=1e-13)
        assert max(abs(g - w) for g, w in zip(got, want)) <= 1e-10


def test_dirichlet_box_ground_state():
    # -u'' on (0, L) with u(0)=u(L)=0; discrete ground state ~ (pi/L)^2
    n = 1000
    length = 30.0
    h = length / n
    diag = [2.0 / h / h] * (n - 1)
    off = [-1.0 / h / h] * (n - 2)
    lam = tridiag_smallest_eigs(diag, off, 1)[0]
    assert lam == pytest.approx((math.pi / length) ** 2, rel=1e-5)


def test_degenerate_pair_resolved():
    eigs = tridiag_smallest_eigs([1.0, 1.0], [0.0], 2)
    assert eigs == pytest.approx([1.0, 1.0], abs=1e-12)


def test_tridiag_validation():
    with pytest.raises(ValueError):
        tridiag_smallest_eigs([1.0, 2.0], [0.5, 0.5], 1)
    with pytest.raises(ValueError):
        tridiag_smallest_eigs([1.0, 2.0], [0.5], 3)
    with pytest.raises(ValueError):
        tridiag_smallest_eigs([1.0, 2.0], [0.5], 0)


def test_richardson_cancels_leading_order():
    exact = -1.9901300326401581
    v_h = exact + 3.0e-4
    v_h2 = exact + 3.0e-4 / 4.0
    assert richardson(v_h, v_h2, 2) == pytest.approx(exact, abs=1e-15)
    # first-order data needs order=1
    assert richardson(exact + 0.1, exact + 0.05, 1) == pytest.approx(exact, abs=1e-15)


def test_richardson_validation():
    with pytest.raises(ValueError):
        richardson(1.0, 1.0, 0)
    with pytest.raises(ValueError):
        richardson(1.0, 1.0, -2)
    with pytest.raises(ValueError):
        richardson(1.0, 1.0, 1.5)


@given(st.integers(min_value=2, max_value=40), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40, deadline=None)
def test_eigenvalues_sorted_and_within_gershgorin(n, seed):
    rng = np.random.default_rng(seed)
    d = rng.uniform(-5.0, 5.0, size=n)
    e = rng.uniform(-2.0, 2.0, size=n - 1)
    got = tridiag_smallest_eigs(d.tolist(), e.tolist(), min(n, 4))
    assert got == sorted(got)
    radius = max(abs(d).max() + 2.0 * abs(e).max(), 1.0)
    assert all(abs(v) <= radius + 1.0 for v in got)
