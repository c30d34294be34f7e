"""Independent oracles for the frozen constants in the unit tests.

Principal values use QUADPACK's Cauchy-weight rule (QAWC) on the partial-fraction
split of the kernel, a different route from the library's symmetric-excision
oracle. Run with python3; prints C++ initialisers.
"""
import math

import numpy as np
from scipy import integrate, optimize


def elem(kind, a, b, x):
    if kind == "interval":
        lo, hi = min(a, b), max(a, b)
        return (x - a) * (x - b) / (a - b) if lo < x < hi else 0.0
    if kind == "right":
        return x - a if x > a else 0.0
    return -(x - a) if x < a else 0.0


def hilbert_pv(V, kinks, x, R=1e4):
    """-(1/pi) p.v. int x(x-1) V(z) / (z(z-1)(z-x)) dz."""
    poles = [0.0, 1.0, x]
    # partial fractions: 1/(z(z-1)(z-x)) = A0/z + A1/(z-1) + Ax/(z-x)
    A = {0.0: 1.0 / ((0 - 1) * (0 - x)), 1.0: 1.0 / (1 * (1 - x)), x: 1.0 / (x * (x - 1))}
    total = 0.0
    # Cauchy windows around each pole, regular quadrature elsewhere
    h = min(0.25, min(abs(p - q) for p in poles for q in poles if p != q) / 3)
    for k in kinks:
        for p in poles:
            if abs(k - p) > 0:
                h = min(h, abs(k - p) / 2)
    windows = [(p - h, p + h) for p in poles]
    cuts = sorted(set([-R, R] + [k for k in kinks if -R < k < R] + [w for pr in windows for w in pr]))
    g = lambda z: V(z) / (z * (z - 1) * (z - x))
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        mid = 0.5 * (lo + hi)
        if any(w0 < mid < w1 for w0, w1 in windows):
            continue
        total += integrate.quad(g, lo, hi, epsabs=1e-14, epsrel=1e-13, limit=500)[0]
    for p, (w0, w1) in zip(poles, windows):
        # A[p] V(z)/(z-p) by QAWC; the other two partial fractions are smooth here
        pieces = sorted(set([w0, w1] + [k for k in kinks if w0 < k < w1]))
        if len(pieces) == 2:
            total += A[p] * integrate.quad(V, w0, w1, weight="cauchy", wvar=p, epsabs=1e-14, epsrel=1e-13)[0]
        else:
            # kink exactly at the pole: split into one-sided pieces around it
            total += A[p] * integrate.quad(lambda z: (V(z) - V(p)) / (z - p), w0, w1, points=[p],
                                           epsabs=1e-14, epsrel=1e-13, limit=500)[0]
            total += A[p] * V(p) * math.log(abs((w1 - p) / (w0 - p)))
        for q in poles:
            if q != p:
                total += A[q] * integrate.quad(lambda z, q=q: V(z) / (z - q), w0, w1, points=[k for k in kinks if w0 < k < w1] or None,
                                               epsabs=1e-14, epsrel=1e-13, limit=500)[0]
    # tails in u = 1/z
    for sgn in (1, -1):
        total += integrate.quad(lambda u: g(sgn / u) / (u * u), 0, 1 / R, epsabs=1e-15, epsrel=1e-13, limit=500)[0]
    return -x * (x - 1) / math.pi * total


def freeze_hilbert():
    cases = [("interval", 2, 3, 5.2), ("interval", 2, 3, 0.4), ("interval", 2, 3, 5.0),
             ("interval", -0.3, 0.6, 0.2), ("interval", -4, -1.5, 2.5),
             ("right", 0, 0, math.e), ("right", -1.5, 0, -2.3), ("right", 2.5, 0, 0.7),
             ("left", -1.5, 0, -2.3), ("left", 1, 0, -3.0), ("left", 3.5, 0, 1.7)]
    print("// kind, a, b, x, H")
    for kind, a, b, x in cases:
        kinks = [a] if kind != "interval" else [a, b]
        h = hilbert_pv(lambda z: elem(kind, a, b, z), kinks, x)
        print(f'{{"{kind}", {a!r}, {b!r}, {x!r}, {h:.15g}}},')


def freeze_distance():
    # (0, inf) vs the semicircle over (1, 3): minimise the distance between sampled points
    def d(params):
        t, s = params
        p = complex(0, math.exp(t))
        q = complex(2 + math.cos(s), math.sin(s))
        return math.acosh(1 + abs(p - q) ** 2 / (2 * p.imag * q.imag))
    best = optimize.minimize(d, [0.5, 1.5], method="Nelder-Mead", options={"xatol": 1e-13, "fatol": 1e-15})
    print(f"distance (0,inf)-(1,3) = {best.fun:.15g}")


def freeze_fourier():
    w0, w1 = 1.0, -1.0
    def coef(n):
        f = lambda p: (np.exp(1j * p) - w0) * (np.exp(1j * p) - w1) / (w0 - w1) * np.exp(-1j * n * p)
        re = integrate.quad(lambda p: f(p).real, 0, math.pi, epsabs=1e-15)[0] / (2 * math.pi)
        im = integrate.quad(lambda p: f(p).imag, 0, math.pi, epsabs=1e-15)[0] / (2 * math.pi)
        return re, im
    for n in (-3, 0, 1, 2, 3, 17):
        re, im = coef(n)
        print(f"{{{n}, {re:.15g}, {im:.15g}}},")


if __name__ == "__main__":
    freeze_hilbert()
    freeze_distance()
    freeze_fourier()
