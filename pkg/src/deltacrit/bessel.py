"""Cylinder functions of orders 0 and 1 in double precision.

Self-contained evaluators for J0, J1, Y0, Y1, I0, I1, K0, K1 plus the scaled
variants exp(-x)*I and exp(x)*K that the radial shell problem needs once k*b
gets large.  Small arguments go through the classical power series; large
arguments go through frozen Chebyshev tables (see scripts/gen_bessel_tables.py
for how those are produced and validated).  Target accuracy is 1e-12 relative
on [1e-8, 600], degrading to ~1e-10 relative only in the immediate
neighbourhood of oscillatory zeros where cancellation is intrinsic.
"""

from __future__ import annotations

import enum
import math

from . import _bessel_tables as _tab

EULER_GAMMA = 0.5772156649015328606

_HARMONIC = [0.0]
for _m in range(1, 80):
    _HARMONIC.append(_HARMONIC[-1] + 1.0 / _m)

_I_SERIES_MAX_X = 20.0


class DomainError(ValueError):
    """Argument outside the function's domain."""


class BesselKind(enum.Enum):
    J0 = "J0"
    J1 = "J1"
    Y0 = "Y0"
    Y1 = "Y1"
    I0 = "I0"
    I1 = "I1"
    K0 = "K0"
    K1 = "K1"


def _check(x: float, allow_zero: bool) -> float:
    x = float(x)
    if math.isnan(x):
        raise DomainError("argument is NaN")
    if x < 0.0 or (x == 0.0 and not allow_zero):
        raise DomainError(f"argument {x} outside domain")
    return x


def _clenshaw(cs: tuple[float, ...], t: float) -> float:
    b1 = 0.0
    b2 = 0.0
    for c in reversed(cs[1:]):
        b1, b2 = 2.0 * t * b1 - b2 + c, b1
    return t * b1 - b2 + 0.5 * cs[0]


# --- small-argument series -------------------------------------------------

def _j0_series(x: float) -> float:
    u = 0.25 * x * x
    term = 1.0
    s = 1.0
    for m in range(1, 60):
        term *= -u / (m * m)
        s += term
        if abs(term) < 1e-18 * abs(s) + 1e-300:
            break
    return s


def _j1_series(x: float) -> float:
    u = 0.25 * x * x
    term = 1.0
    s = 1.0
    for m in range(1, 60):
        term *= -u / (m * (m + 1))
        s += term
        if abs(term) < 1e-18 * abs(s) + 1e-300:
            break
    return 0.5 * x * s


def _y0_series(x: float) -> float:
    u = 0.25 * x * x
    ell = math.log(0.5 * x) + EULER_GAMMA
    t = 1.0
    s = 0.0
    sign = 1.0
    for m in range(1, 60):
        t *= u / (m * m)
        s += sign * _HARMONIC[m] * t
        sign = -sign
        if t < 1e-18 * (abs(s) + 1.0):
            break
    return (2.0 / math.pi) * (ell * _j0_series(x) + s)


def _y1_series(x: float) -> float:
    u = 0.25 * x * x
    ell = math.log(0.5 * x) + EULER_GAMMA
    t = 1.0
    s = 1.0  # m = 0 term: H_0 + H_1 = 1
    sign = -1.0
    for m in range(1, 60):
        t *= u / (m * (m + 1))
        s += sign * (_HARMONIC[m] + _HARMONIC[m + 1]) * t
        sign = -sign
        if t < 1e-18 * (abs(s) + 1.0):
            break
    return (2.0 / math.pi) * (ell * _j1_series(x) - 1.0 / x - 0.25 * x * s)


def _i0_series(x: float) -> float:
    u = 0.25 * x * x
    term = 1.0
    s = 1.0
    for m in range(1, 90):
        term *= u / (m * m)
        s += term
        if term < 1e-18 * s:
            break
    return s


def _i1_series(x: float) -> float:
    u = 0.25 * x * x
    term = 1.0
    s = 1.0
    for m in range(1, 90):
        term *= u / (m * (m + 1))
        s += term
        if term < 1e-18 * s:
            break
    return 0.5 * x * s


def _k0_series(x: float) -> float:
    u = 0.25 * x * x
    ell = math.log(0.5 * x) + EULER_GAMMA
    t = 1.0
    s = 0.0
    for m in range(1, 60):
        t *= u / (m * m)
        s += _HARMONIC[m] * t
        if t < 1e-18 * (abs(s) + 1.0):
            break
    return -ell * _i0_series(x) + s


def _k1_series(x: float) -> float:
    u = 0.25 * x * x
    ell = math.log(0.5 * x) + EULER_GAMMA
    t = 1.0
    s = 1.0
    for m in range(1, 60):
        t *= u / (m * (m + 1))
        s += (_HARMONIC[m] + _HARMONIC[m + 1]) * t
        if t < 1e-18 * (abs(s) + 1.0):
            break
    return 1.0 / x + ell * _i1_series(x) - 0.25 * x * s


def _i_asym_scaled(order: int, x: float) -> float:
    # exp(-x) I_n(x) ~ (2 pi x)^{-1/2} sum_m a_m, optimal truncation ~exp(-2x)
    mu = 4.0 * order * order
    term = 1.0
    s = 1.0
    prev = math.inf
    for m in range(1, 80):
        term *= -(mu - (2 * m - 1) ** 2) / (8.0 * m * x)
        if abs(term) >= prev:
            break
        s += term
        prev = abs(term)
        if abs(term) < 1e-18 * abs(s):
            break
    return s / math.sqrt(2.0 * math.pi * x)


# --- large-argument phase-amplitude form for J and Y ------------------------

def _jy_large(order: int, x: float) -> tuple[float, float]:
    t = 2.0 * (_tab.XSPLIT_JY / x) ** 2 - 1.0
    if order == 0:
        p = _clenshaw(_tab.P0, t)
        q = _clenshaw(_tab.Q0, t) / x
    else:
        p = _clenshaw(_tab.P1, t)
        q = _clenshaw(_tab.Q1, t) / x
    amp = math.sqrt(2.0 / (math.pi * x))
    c = math.cos(x)
    s = math.sin(x)
    r = math.sqrt(0.5)
    if order == 0:
        cchi = (c + s) * r
        schi = (s - c) * r
    else:
        cchi = (s - c) * r
        schi = -(s + c) * r
    return amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)


# --- public evaluators ------------------------------------------------------

def j0(x: float) -> float:
    x = _check(x, allow_zero=True)
    if x <= _tab.XSPLIT_JY:
        return _j0_series(x)
    return _jy_large(0, x)[0]


def j1(x: float) -> float:
    x = _check(x, allow_zero=True)
    if x <= _tab.XSPLIT_JY:
        return _j1_series(x)
    return _jy_large(1, x)[0]


def y0(x: float) -> float:
    x = _check(x, allow_zero=False)
    if x <= _tab.XSPLIT_JY:
        return _y0_series(x)
    return _jy_large(0, x)[1]


def y1(x: float) -> float:
    x = _check(x, allow_zero=False)
    if x <= _tab.XSPLIT_JY:
        return _y1_series(x)
    return _jy_large(1, x)[1]


def i0e(x: float) -> float:
    """exp(-x) * I0(x), safe for arbitrarily large x."""
    x = _check(x, allow_zero=True)
    if x <= _I_SERIES_MAX_X:
        return math.exp(-x) * _i0_series(x)
    return _i_asym_scaled(0, x)


def i1e(x: float) -> float:
    """exp(-x) * I1(x)."""
    x = _check(x, allow_zero=True)
    if x <= _I_SERIES_MAX_X:
        return math.exp(-x) * _i1_series(x)
    return _i_asym_scaled(1, x)


def i0(x: float) -> float:
    x = _check(x, allow_zero=True)
    if x <= _I_SERIES_MAX_X:
        return _i0_series(x)
    try:
        ex = math.exp(x)
    except OverflowError:
        raise OverflowError(f"i0({x}) exceeds the double range; use i0e") from None
    return ex * _i_asym_scaled(0, x)


def i1(x: float) -> float:
    x = _check(x, allow_zero=True)
    if x <= _I_SERIES_MAX_X:
        return _i1_series(x)
    try:
        ex = math.exp(x)
    except OverflowError:
        raise OverflowError(f"i1({x}) exceeds the double range; use i1e") from None
    return ex * _i_asym_scaled(1, x)


def k0e(x: float) -> float:
    """exp(x) * K0(x), safe for arbitrarily large x."""
    x = _check(x, allow_zero=False)
    if x <= _tab.XSPLIT_K:
        return math.exp(x) * _k0_series(x)
    t = 0.5 * (8.0 / x - 2.0)
    return _clenshaw(_tab.K0, t) / math.sqrt(x)


def k1e(x: float) -> float:
    """exp(x) * K1(x)."""
    x = _check(x, allow_zero=False)
    if x <= _tab.XSPLIT_K:
        return math.exp(x) * _k1_series(x)
    t = 0.5 * (8.0 / x - 2.0)
    return _clenshaw(_tab.K1, t) / math.sqrt(x)


def k0(x: float) -> float:
    x = _check(x, allow_zero=False)
    if x <= _tab.XSPLIT_K:
        return _k0_series(x)
    if x > 700.0:
        raise OverflowError(f"k0({x}) underflows the double range; use k0e")
    return math.exp(-x) * k0e(x)


def k1(x: float) -> float:
    x = _check(x, allow_zero=False)
    if x <= _tab.XSPLIT_K:
        return _k1_series(x)
    if x > 700.0:
        raise OverflowError(f"k1({x}) underflows the double range; use k1e")
    return math.exp(-x) * k1e(x)


def k1k0_ratio(x: float) -> float:
    """K1(x)/K0(x), computed from the scaled forms so large x never underflows."""
    return k1e(x) / k0e(x)


def k_ratio_bounds(x: float, p: float = 0.25, q: float = 0.0) -> tuple[float, float]:
    """Pinching bounds (1 + 1/(2(x+p)), 1 + 1/(2(x+q))) for K1(x)/K0(x).

    The containment holds strictly for every x > 0 exactly when p >= 1/4 and
    q = 0; those are the defaults.
    """
    x = _check(x, allow_zero=False)
    return 1.0 + 0.5 / (x + p), 1.0 + 0.5 / (x + q)


_PLAIN = {
    BesselKind.J0: j0, BesselKind.J1: j1,
    BesselKind.Y0: y0, BesselKind.Y1: y1,
    BesselKind.I0: i0, BesselKind.I1: i1,
    BesselKind.K0: k0, BesselKind.K1: k1,
}

_SCALED = {
    BesselKind.I0: i0e, BesselKind.I1: i1e,
    BesselKind.K0: k0e, BesselKind.K1: k1e,
}


def bessel_eval(kind: BesselKind, x: float, scaled: bool = False) -> float:
    """Evaluate one of the eight cylinder functions; scaled only for I and K."""
    if scaled:
        fn = _SCALED.get(kind)
        if fn is None:
            raise DomainError(f"no scaled variant for {kind.value}")
        return fn(x)
    return _PLAIN[kind](x)
