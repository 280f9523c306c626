"""Bessel evaluator accuracy and structural identities.

Reference values come from mpmath at 25 significant digits.  Oscillatory
families are compared relative to their amplitude envelope sqrt(2/(pi x)),
since near a zero of J or Y no double-precision evaluator can deliver small
plain relative error; the monotone I and K families use plain relative error.
"""

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltacrit import bessel
from deltacrit.bessel import BesselKind, DomainError

mpmath.mp.dps = 25

# spans both split points (6 for J/Y, 2 for K, 20 for I) and the far tails
GRID = [1e-8 * (6e10) ** (i / 199) for i in range(200)] + [
    1.9, 1.95, 2.0, 2.05, 2.1, 5.9, 5.95, 6.0, 6.05, 6.1, 19.5, 20.0, 20.5, 600.0,
]


def _envelope_err(got: float, want: float, x: float) -> float:
    return abs(got - want) / max(abs(want), math.sqrt(2.0 / (math.pi * x)))


@pytest.mark.parametrize(
    "func,ref",
    [
        (bessel.j0, lambda x: mpmath.besselj(0, x)),
        (bessel.j1, lambda x: mpmath.besselj(1, x)),
        (bessel.y0, lambda x: mpmath.bessely(0, x)),
        (bessel.y1, lambda x: mpmath.bessely(1, x)),
    ],
    ids=["j0", "j1", "y0", "y1"],
)
def test_oscillatory_families_match_mpmath(func, ref):
    worst = 0.0
    for x in GRID:
        want = float(ref(x))
        worst = max(worst, _envelope_err(func(x), want, x))
    assert worst <= 1e-12


@pytest.mark.parametrize(
    "func,ref",
    [
        (bessel.i0, lambda x: mpmath.besseli(0, x)),
        (bessel.i1, lambda x: mpmath.besseli(1, x)),
        (bessel.k0, lambda x: mpmath.besselk(0, x)),
        (bessel.k1, lambda x: mpmath.besselk(1, x)),
    ],
    ids=["i0", "i1", "k0", "k1"],
)
def test_monotone_families_match_mpmath(func, ref):
    worst = 0.0
    for x in GRID:
        if x > 600.0:
            continue
        want = float(ref(x))
        worst = max(worst, abs(func(x) - want) / abs(want))
    assert worst <= 1e-12


@pytest.mark.parametrize(
    "func,ref",
    [
        (bessel.i0e, lambda x: mpmath.besseli(0, x) * mpmath.exp(-x)),
        (bessel.i1e, lambda x: mpmath.besseli(1, x) * mpmath.exp(-x)),
        (bessel.k0e, lambda x: mpmath.besselk(0, x) * mpmath.exp(x)),
        (bessel.k1e, lambda x: mpmath.besselk(1, x) * mpmath.exp(x)),
    ],
    ids=["i0e", "i1e", "k0e", "k1e"],
)
def test_scaled_families_match_mpmath(func, ref):
    # scaled forms stay representable far beyond the unscaled overflow point
    for x in GRID + [1e4, 1e6]:
        want = float(ref(x))
        assert abs(func(x) - want) / abs(want) <= 1e-12


def test_literature_spot_values():
    assert bessel.j0(1.0) == pytest.approx(0.7651976865579666, rel=1e-14)
    assert bessel.y0(1.0) == pytest.approx(0.08825696421567696, rel=1e-14)
    assert bessel.i0(1.0) == pytest.approx(1.2660658777520084, rel=1e-14)
    assert bessel.k0(1.0) == pytest.approx(0.42102443824070834, rel=1e-14)
    assert bessel.k1k0_ratio(2.0) == pytest.approx(1.228036929818908, rel=1e-13)


def test_wronskian_cylinder():
    for x in GRID:
        resid = (bessel.j1(x) * bessel.y0(x) - bessel.j0(x) * bessel.y1(x)) * math.pi * x / 2.0
        assert abs(resid - 1.0) <= 1e-10


def test_wronskian_modified():
    for x in GRID + [1e4]:
        resid = (bessel.i0e(x) * bessel.k1e(x) + bessel.i1e(x) * bessel.k0e(x)) * x
        assert abs(resid - 1.0) <= 1e-10


def test_ratio_bounds_contain_ratio():
    for x in [1e-3 * (5e4) ** (i / 99) for i in range(100)]:
        lo, hi = bessel.k_ratio_bounds(x)
        assert lo < bessel.k1k0_ratio(x) < hi


def test_ratio_bounds_sharp_at_quarter():
    # relaxing the lower-bound shift below 1/4 breaks containment at large x
    lo, _ = bessel.k_ratio_bounds(50.0, p=0.1)
    assert lo > bessel.k1k0_ratio(50.0)


def test_domain_errors():
    for func in (bessel.y0, bessel.y1, bessel.k0, bessel.k1, bessel.k0e, bessel.k1e):
        with pytest.raises(DomainError):
            func(0.0)
        with pytest.raises(DomainError):
            func(-1.0)
    with pytest.raises(DomainError):
        bessel.j0(math.nan)
    with pytest.raises(DomainError):
        bessel.j0(-2.0)


def test_unscaled_overflow_raises():
    with pytest.raises(OverflowError):
        bessel.i0(800.0)
    with pytest.raises(OverflowError):
        bessel.k0(800.0)
    assert bessel.i0e(800.0) > 0.0
    assert bessel.k0e(800.0) > 0.0


def test_bessel_eval_dispatch():
    for kind, func in (
        (BesselKind.J0, bessel.j0),
        (BesselKind.J1, bessel.j1),
        (BesselKind.Y0, bessel.y0),
        (BesselKind.Y1, bessel.y1),
        (BesselKind.I0, bessel.i0),
        (BesselKind.I1, bessel.i1),
        (BesselKind.K0, bessel.k0),
        (BesselKind.K1, bessel.k1),
    ):
        assert bessel.bessel_eval(kind, 1.5) == func(1.5)
    assert bessel.bessel_eval(BesselKind.I0, 3.0, scaled=True) == bessel.i0e(3.0)
    assert bessel.bessel_eval(BesselKind.K1, 3.0, scaled=True) == bessel.k1e(3.0)
    with pytest.raises(DomainError):
        bessel.bessel_eval(BesselKind.J0, 1.0, scaled=True)


@given(st.floats(min_value=1e-6, max_value=600.0))
@settings(max_examples=200, deadline=None)
def test_wronskians_hold_everywhere(x):
    jy = (bessel.j1(x) * bessel.y0(x) - bessel.j0(x) * bessel.y1(x)) * math.pi * x / 2.0
    ik = (bessel.i0e(x) * bessel.k1e(x) + bessel.i1e(x) * bessel.k0e(x)) * x
    assert abs(jy - 1.0) <= 1e-9
    assert abs(ik - 1.0) <= 1e-10


@given(st.floats(min_value=1e-6, max_value=700.0))
@settings(max_examples=200, deadline=None)
def test_modified_family_shape(x):
    # I grows from 1, K ratio stays above 1 and below the crude 1 + 1/x cap
    assert bessel.i0e(x) <= 1.0
    assert bessel.i1e(x) < bessel.i0e(x)
    r = bessel.k1k0_ratio(x)
    assert 1.0 < r


@given(
    st.floats(min_value=1e-3, max_value=100.0),
    st.floats(min_value=1.01, max_value=2.0),
)
@settings(max_examples=200, deadline=None)
def test_ratio_decreasing(x, factor):
    assert bessel.k1k0_ratio(x * factor) < bessel.k1k0_ratio(x)
