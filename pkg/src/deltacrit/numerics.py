"""Deterministic scalar root finding, Sturm-sequence tridiagonal eigenvalues,
and Richardson extrapolation.

The root finder targets the dispersion equations this package solves: smooth
scalar functions on an interval with finitely many simple roots and the
occasional simple pole (the Robin matching function and the oscillatory-basis
shell equation both have one).  A uniform scan locates sign changes, each
bracket is refined by bisection with secant acceleration, and sign changes
whose flanking values blow up under refinement are classified as poles and
dropped.  Everything here is deterministic: identical inputs give bit-identical
outputs.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

_MAX_ITER = 200
_POLE_MAGNITUDE = 1e6
_SCAN_BASE = 512
_SCAN_MAX = 8192
_PIVMIN = 1e-300
_EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class Bracket:
    """Sign-changing interval: f(lo) and f(hi) finite with opposite signs."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("bracket endpoints out of order")
        if not (math.isfinite(self.f_lo) and math.isfinite(self.f_hi)):
            raise ValueError("bracket values must be finite")
        if (self.f_lo < 0.0) == (self.f_hi < 0.0):
            raise ValueError("bracket values must differ in sign")


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    converged: bool


def _call(f: Callable[[float], float], x: float) -> float:
    # pure-Python floats raise on 0/0-adjacent pole hits and exp overflow
    # instead of producing IEEE infinities; fold both into +inf so the
    # pole-exclusion logic sees them
    try:
        return f(x)
    except (ZeroDivisionError, OverflowError):
        return math.inf


def _refine(f: Callable[[float], float], br: Bracket, tol: float) -> Optional[RootResult]:
    """Shrink a bracket to machine width; None means the sign change is a pole.

    Even iterations try a regula-falsi point, odd ones bisect, so the width at
    least halves every two steps and the 200-iteration cap is never the binding
    limit for a genuine root.  A pole is recognized by flanking values that end
    above _POLE_MAGNITUDE after growing from their scan-time size.
    """
    xa, xb, fa, fb = br.lo, br.hi, br.f_lo, br.f_hi
    m_start = min(abs(fa), abs(fb))
    iterations = 0
    while iterations < _MAX_ITER:
        if xb - xa <= 2.0 * _EPS * max(abs(xa), abs(xb)) + 1e-300:
            break
        iterations += 1
        if iterations % 2 == 0 and fb != fa:
            cand = (xa * fb - xb * fa) / (fb - fa)
            x_new = cand if xa < cand < xb else 0.5 * (xa + xb)
        else:
            x_new = 0.5 * (xa + xb)
        f_new = _call(f, x_new)
        if math.isnan(f_new):
            raise ValueError(f"function evaluated to NaN at x={x_new!r}")
        if f_new == 0.0:
            return RootResult(root=x_new, residual=0.0, iterations=iterations, converged=True)
        if (f_new < 0.0) == (fa < 0.0):
            xa, fa = x_new, f_new
        else:
            xb, fb = x_new, f_new
    m_end = min(abs(fa), abs(fb))
    if m_end > _POLE_MAGNITUDE and m_end > 10.0 * m_start:
        return None
    if abs(fa) <= abs(fb):
        root, residual = xa, fa
    else:
        root, residual = xb, fb
    slope = abs(fb - fa) / (xb - xa) if xb > xa else 0.0
    converged = iterations < _MAX_ITER and abs(residual) <= tol * (1.0 + slope)
    return RootResult(root=root, residual=residual, iterations=iterations, converged=converged)


def _scan_roots(
    f: Callable[[float], float], lo: float, hi: float, n: int, tol: float
) -> list[RootResult]:
    span = hi - lo
    x_first = lo + span * 1e-16
    if not x_first > lo:
        x_first = math.nextafter(lo, hi)
    x_last = hi - span * 1e-16
    if not x_last < hi:
        x_last = math.nextafter(hi, lo)
    step = (x_last - x_first) / n
    results: list[RootResult] = []
    prev_x = x_first
    prev_f: Optional[float] = None  # last finite nonzero value seen
    zero_at: Optional[float] = None  # first point of the current exact-zero run
    for i in range(n + 1):
        x = x_last if i == n else x_first + step * i
        v = _call(f, x)
        if math.isnan(v):
            raise ValueError(f"function evaluated to NaN at x={x!r}")
        if v == 0.0:
            # defer: a zero-run is a root only if the flanking signs differ,
            # otherwise it is saturation (coth(k)-1 underflows to exactly 0)
            if zero_at is None:
                zero_at = x
            continue
        if math.isinf(v):
            # exact pole hit; treat as a scan split, refinement never sees it
            prev_x, prev_f, zero_at = x, None, None
            continue
        if prev_f is not None and (v < 0.0) != (prev_f < 0.0):
            if zero_at is not None:
                results.append(RootResult(root=zero_at, residual=0.0, iterations=0, converged=True))
            else:
                refined = _refine(f, Bracket(prev_x, x, prev_f, v), tol)
                if refined is not None:
                    results.append(refined)
        prev_x, prev_f, zero_at = x, v, None
    return results


def find_roots(
    f: Callable[[float], float],
    interval: tuple[float, float],
    max_roots: Optional[int] = None,
    tol: float = 1e-12,
) -> list[RootResult]:
    """All sign-change roots of f on the open interval, ascending.

    Scans at 512 points, then doubles the density (up to 8192) until the root
    count between consecutive densities agrees; the finest scan's refinements
    are returned.  Poles are excluded.  NaN anywhere raises ValueError.
    """
    lo, hi = float(interval[0]), float(interval[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValueError("interval must be finite with lo < hi")
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if max_roots is not None and max_roots < 1:
        raise ValueError("max_roots must be positive when given")
    n = _SCAN_BASE
    out = _scan_roots(f, lo, hi, n, tol)
    while n < _SCAN_MAX:
        finer = _scan_roots(f, lo, hi, 2 * n, tol)
        stable = len(finer) == len(out)
        n *= 2
        out = finer
        if stable:
            break
    if max_roots is not None:
        out = out[:max_roots]
    return out


def tridiag_smallest_eigs(
    diag: Sequence[float],
    offdiag: Sequence[float],
    count: int,
    abstol: Optional[float] = None,
) -> list[float]:
    """The `count` smallest eigenvalues of a symmetric tridiagonal matrix.

    Sturm-sequence bisection: the number of negative pivots of the LDL^T
    factorization of (T - sigma I) counts eigenvalues below sigma, so each
    eigenvalue is located independently inside the Gershgorin interval.
    Default absolute tolerance is 1e-12 * max(1, max |diag|).
    """
    d = [float(v) for v in diag]
    e = [float(v) for v in offdiag]
    n = len(d)
    if len(e) != n - 1:
        raise ValueError("offdiag must have length len(diag) - 1")
    if not 1 <= count <= n:
        raise ValueError("count must lie in [1, dimension]")
    if abstol is None:
        abstol = 1e-12 * max(1.0, max(abs(v) for v in d))
    e2 = [v * v for v in e]
    tail = list(zip(d[1:], e2))
    d0 = d[0]

    def negatives_below(sigma: float) -> int:
        cnt = 0
        q = d0 - sigma
        if -_PIVMIN < q < _PIVMIN:
            q = -_PIVMIN
        if q < 0.0:
            cnt = 1
        for di, e2i in tail:
            q = di - sigma - e2i / q
            if -_PIVMIN < q < _PIVMIN:
                q = -_PIVMIN
            if q < 0.0:
                cnt += 1
        return cnt

    lo = math.inf
    hi = -math.inf
    for i in range(n):
        r = (abs(e[i - 1]) if i > 0 else 0.0) + (abs(e[i]) if i < n - 1 else 0.0)
        lo = min(lo, d[i] - r)
        hi = max(hi, d[i] + r)
    pad = abstol + 1e-12 * max(1.0, abs(lo), abs(hi))
    lo -= pad
    hi += pad

    eigs: list[float] = []
    floor = lo
    for j in range(1, count + 1):
        a, b = floor, hi
        while b - a > abstol:
            mid = 0.5 * (a + b)
            if negatives_below(mid) >= j:
                b = mid
            else:
                a = mid
        eigs.append(0.5 * (a + b))
        floor = a
    return eigs


def richardson(v_h: float, v_h2: float, order: int) -> float:
    """Cancel the leading h^order error term from values at steps h and h/2."""
    if order < 1 or int(order) != order:
        raise ValueError("order must be a positive integer")
    weight = 2.0 ** order
    return (weight * v_h2 - v_h) / (weight - 1.0)
