"""Regenerate the frozen Chebyshev tables in src/deltacrit/_bessel_tables.py.

The cylinder-function evaluators split each function into a small-argument
series region and a large-argument region handled by Chebyshev fits:

  * J0/J1/Y0/Y1 for x > 6 go through the phase-amplitude decomposition
        Jn(x) = sqrt(2/(pi x)) * (P_n cos(chi_n) - Q_n sin(chi_n))
        Yn(x) = sqrt(2/(pi x)) * (P_n sin(chi_n) + Q_n cos(chi_n))
    with chi_n = x - (2n+1) pi/4.  P_n and x*Q_n are smooth functions of
    t = 2 (6/x)^2 - 1 on [-1, 1] and are fitted here.
  * K0/K1 for x > 2 are fitted as f_n(t) = exp(x) sqrt(x) Kn(x) with
    t = (8/x - 2)/2, again smooth on [-1, 1].

Everything is computed with mpmath at 40 significant digits and the frozen
double-precision tables are validated against mpmath on dense grids before
the output file is written.  Run from the repository root:

    python scripts/gen_bessel_tables.py
"""

import math
import sys
from pathlib import Path

import mpmath as mp

mp.mp.dps = 40

XSPLIT_JY = 6.0
XSPLIT_K = 2.0
NCOEF = 56
TRIM = mp.mpf("1e-22")

OUT = Path(__file__).resolve().parent.parent / "src" / "deltacrit" / "_bessel_tables.py"


def cheb_coeffs(f, n):
    """Chebyshev coefficients of f on [-1,1], convention f = c0/2 + sum c_j T_j."""
    thetas = [mp.pi * (k + mp.mpf("0.5")) / n for k in range(n)]
    vals = [f(mp.cos(th)) for th in thetas]
    out = []
    for j in range(n):
        acc = mp.mpf(0)
        for k in range(n):
            acc += vals[k] * mp.cos(j * thetas[k])
        out.append(2 * acc / n)
    return out


def trim_coeffs(cs):
    top = max(abs(c) for c in cs)
    last = len(cs)
    while last > 1 and abs(cs[last - 1]) < TRIM * top:
        last -= 1
    return [float(c) for c in cs[:last]]


def clenshaw(cs, t):
    """Double-precision Clenshaw sum, must match the production evaluator."""
    b1 = 0.0
    b2 = 0.0
    for c in reversed(cs[1:]):
        b1, b2 = 2.0 * t * b1 - b2 + c, b1
    return t * b1 - b2 + 0.5 * cs[0]


def x_from_t_jy(t):
    return XSPLIT_JY / mp.sqrt((t + 1) / 2)


def x_from_t_k(t):
    return 8 / (2 * t + 2)


def p_func(order):
    def f(t):
        x = x_from_t_jy(t)
        chi = x - (2 * order + 1) * mp.pi / 4
        j = mp.besselj(order, x)
        y = mp.bessely(order, x)
        return mp.sqrt(mp.pi * x / 2) * (j * mp.cos(chi) + y * mp.sin(chi))

    return f


def q_func(order):
    def f(t):
        x = x_from_t_jy(t)
        chi = x - (2 * order + 1) * mp.pi / 4
        j = mp.besselj(order, x)
        y = mp.bessely(order, x)
        return x * mp.sqrt(mp.pi * x / 2) * (y * mp.cos(chi) - j * mp.sin(chi))

    return f


def k_func(order):
    def f(t):
        x = x_from_t_k(t)
        return mp.exp(x) * mp.sqrt(x) * mp.besselk(order, x)

    return f


def eval_jy_double(coefs, order, x):
    t = 2.0 * (XSPLIT_JY / x) ** 2 - 1.0
    p = clenshaw(coefs[f"P{order}"], t)
    q = clenshaw(coefs[f"Q{order}"], t) / x
    amp = math.sqrt(2.0 / (math.pi * x))
    c, s = math.cos(x), math.sin(x)
    r = math.sqrt(0.5)
    if order == 0:
        cchi, schi = (c + s) * r, (s - c) * r
    else:
        cchi, schi = (s - c) * r, -(s + c) * r
    return amp * (p * cchi - q * schi), amp * (p * schi + q * cchi)


def eval_k_double(coefs, order, x):
    t = (8.0 / x - 2.0) / 2.0
    return clenshaw(coefs[f"K{order}"], t) / math.sqrt(x)  # this is exp(x)*K(x)


def validate(coefs):
    worst = {"J0": 0.0, "J1": 0.0, "Y0": 0.0, "Y1": 0.0, "K0": 0.0, "K1": 0.0}
    mp.mp.dps = 25
    npts = 400
    for i in range(npts):
        x = XSPLIT_JY * (700.0 / XSPLIT_JY) ** (i / (npts - 1.0))
        env = math.sqrt(2.0 / (math.pi * x))
        for order in (0, 1):
            jd, yd = eval_jy_double(coefs, order, x)
            jt = float(mp.besselj(order, x))
            yt = float(mp.bessely(order, x))
            worst[f"J{order}"] = max(worst[f"J{order}"], abs(jd - jt) / env)
            worst[f"Y{order}"] = max(worst[f"Y{order}"], abs(yd - yt) / env)
    for i in range(npts):
        x = XSPLIT_K * (1500.0 / XSPLIT_K) ** (i / (npts - 1.0))
        for order in (0, 1):
            kd = eval_k_double(coefs, order, x)
            kt = float(mp.exp(x) * mp.besselk(order, x))
            worst[f"K{order}"] = max(worst[f"K{order}"], abs(kd - kt) / kt)
    mp.mp.dps = 40
    return worst


def main():
    coefs = {}
    for order in (0, 1):
        coefs[f"P{order}"] = trim_coeffs(cheb_coeffs(p_func(order), NCOEF))
        coefs[f"Q{order}"] = trim_coeffs(cheb_coeffs(q_func(order), NCOEF))
        coefs[f"K{order}"] = trim_coeffs(cheb_coeffs(k_func(order), NCOEF))
        print(f"order {order}: len P={len(coefs[f'P{order}'])} "
              f"Q={len(coefs[f'Q{order}'])} K={len(coefs[f'K{order}'])}")

    worst = validate(coefs)
    print("worst envelope-relative (J/Y) and relative (K) fit errors:")
    for name, err in worst.items():
        print(f"  {name}: {err:.3e}")
    if max(worst.values()) > 5e-15:
        print("fit accuracy target missed, not writing tables", file=sys.stderr)
        return 1

    lines = [
        '"""Frozen Chebyshev tables for the cylinder-function evaluators.',
        "",
        "Generated by scripts/gen_bessel_tables.py; do not edit by hand.",
        '"""',
        "",
        f"XSPLIT_JY = {XSPLIT_JY!r}",
        f"XSPLIT_K = {XSPLIT_K!r}",
        "",
    ]
    for name in ("P0", "Q0", "P1", "Q1", "K0", "K1"):
        lines.append(f"{name} = (")
        for c in coefs[name]:
            lines.append(f"    {c!r},")
        lines.append(")")
        lines.append("")
    OUT.write_text("\n".join(lines))
    print(f"wrote {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
