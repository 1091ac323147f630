"""Independent reference values computed with mpmath at 40 digits.

Nothing here imports the package. ``python tests/oracle.py`` regenerates
tests/golden.json; the test suite only reads the frozen file.
"""
import json
import math
import pathlib

import mpmath as mp
import sympy

mp.mp.dps = 40

R, R1, a1, a2 = mp.mpf("6.50"), mp.mpf("3.82"), mp.mpf("0.92"), mp.mpf("5.37")
EC = mp.mpf("0.5772156649")
PI = mp.pi


def E_tilde(H, q):
    lq, lH = mp.log(q), mp.log(H)
    return (lq * lH / PI + lH ** 2 / (2 * PI) + (1 / PI + a1) * lq - mp.log(2 * PI) / PI * lH
            - mp.log(2 * PI * mp.e) / PI + a2 + a1 - a1 / H)


def b2(al, r, q):
    lq = mp.log(q)
    return 1 + mp.exp((-al * lq + 2 * al / r) * lq)


def mu(m):
    return mp.factorial(2 * m + 1) / (mp.factorial(m) * mp.sqrt(2 * m + 1))


def nu(m):
    return mp.factorial(2 * m + 1) / (4 ** m * mp.factorial(m) ** 2)


def J0():
    return mp.quad(lambda T: mp.log(6 * (abs(T) + 12)), [-1, 0, 1])


def J(m):
    return 2 * mp.quad(lambda T: mp.log(6 * (T + 12)) / T ** m, [1, 10, 100, mp.inf])


def r_terms(al, eps, H, m, q):
    al, eps, H, q = map(mp.mpf, (al, eps, H, q))
    lq, lqH = mp.log(q), mp.log(q * H)
    lH = mp.log(H)
    # first display, line by line
    br = (lH * mp.log(q * q * H) / (2 * PI) + (1 / PI + a1) * lq - mp.log(2 * PI) / PI * lH
          - mp.log(2 * PI * mp.e) / PI + a2 + a1 - a1 / H)
    r1 = (b2(al, R1, q) * (2 * m + 1) / (2 * eps * m) * br * q ** (-al / R1 * lq / lqH)
          + b2(al, R1, q) * ((1 + a1 * PI) / (2 * PI) * lq - (mp.log(2 * PI * mp.e) + a2 * PI) / (2 * PI))
          * q ** (-al / R1)
          + 4 * b2(al, R, q) * (mp.exp(EC) * mp.log(lq) + mp.mpf("2.51") / mp.log(lq))
          * (q ** (-1 - al / R) + q ** (-1 - al / R * lq / lqH)))
    pre = mu(m) / (H * eps) ** m
    l2 = mp.log(q * H / (2 * PI))
    r2 = (q ** (-al / R * lq / lqH) * pre
          * (H * l2 / (2 * PI * (m - 2)) + H / (2 * PI * (m - 2) ** 2)
             + a1 / (2 * PI * (m - 2) * (m - 1)) + a1 * lqH + a2)
          + q ** (-al * lq + al / R * lq / lqH) * pre
          * (H / (2 * PI * (m - 1)) * (l2 + mp.mpf(1) / (m - 1)) + a1 * lqH + a2 + a1 / (2 * m)))
    r3 = (J0() + mu(m) * J(m) / eps ** m) / (2 * PI) * q ** (-al / 2 * lq)
    r4 = mp.mpf("2.10") * nu(m) / eps * q ** (-al * lq)
    r5 = nu(m) / eps * (al * lq ** 2 + eps) * q ** (-al * lq)
    return [r1, r2, r3, r4, r5]


def tilde_alpha(H, q, eps, r=R1):
    H, q, eps = map(mp.mpf, (H, q, eps))
    lq = mp.log(q)
    return r * mp.log(q * H) / lq ** 2 * mp.log(q * mp.log(H) * mp.log(q * q * H) / (2 * PI * eps))


def tilde_H(m, q, eps, u):
    q, eps, u = map(mp.mpf, (q, eps, u))
    inner = 4 / (u * mp.sqrt(m)) * (4 * m / mp.e) ** m * (q * mp.log(q) / (4 * PI * eps)) ** (1 - R1 / R)
    return inner ** (mp.mpf(1) / (m - 1)) / eps


def tilde_m(q, eps, u):
    q, eps, u = map(mp.mpf, (q, eps, u))
    return mp.mpf("0.5") + mp.log(16 / u * (q * mp.log(q) / (4 * PI * eps)) ** (1 - R1 / R))


def laplace(s, L, eps, m):
    s = mp.mpc(s)
    f = lambda t: ((t - L) * (L + eps - t)) ** m * mp.exp(-s * t)
    return mp.quad(f, mp.linspace(L, L + eps, 9))


def fm_l2_over_l1(m, eps):
    # ||f^(m)||_2 / ||f||_1 from the explicit polynomial, L = 0
    t = sympy.symbols("t")
    e = sympy.Rational(eps)
    f = (t * (e - t)) ** m
    dm = sympy.diff(f, t, m)
    l2 = sympy.sqrt(sympy.integrate(dm ** 2, (t, 0, e)))
    l1 = sympy.integrate(f, (t, 0, e))
    linf = f.subs(t, e / 2)
    return float(l2 / l1), float(linf / l1)


C1, C2 = mp.mpf("0.521"), mp.mpf("2.562")
C3 = mp.sqrt(C2 / C1)


def clustering_root():
    g = lambda x: ((C2 - C1) / 2 - 1) * x - mp.mpf("2.072") * (mp.sqrt(C1) + mp.sqrt(C2)) * mp.sqrt(x) - 12 * mp.log(C2 * x)
    return mp.findroot(g, 68000)


def inequality_root(alpha="4.3060", eps="1.9"):
    al, ep = mp.mpf(alpha), mp.mpf(eps)
    g = lambda x: (x / 3 - 4 * mp.log(C2 * x) - mp.log(1 + C3 ** 6 / 2) / 3
                   - al * mp.log(3 * (C2 * x) ** 6) ** 2 - ep)
    return mp.findroot(g, 70000)


def kappa0_cubed(x):
    A = C1 * x
    return ((A / (24 * C3 * (1 / (6 * A ** 3) + 1))) ** mp.mpf(1.5) + mp.mpf(1) / 4
            + 1 / (2 * C3 ** 6)) / (1 + C3 ** 6 / 2)


def min_cubes_dp(N, cap=9):
    """Plain dynamic programme over all cubes, for cross-checking."""
    INF = cap + 1
    best = [INF] * (N + 1)
    best[0] = 0
    cubes = [k ** 3 for k in range(1, N + 1) if k ** 3 <= N]
    for n in range(1, N + 1):
        b = INF
        for c in cubes:
            if c > n:
                break
            v = best[n - c] + 1
            if v < b:
                b = v
        best[n] = b
    return best


def build():
    g = {}
    g["E_tilde_62.5_1e10"] = float(E_tilde(mp.mpf("62.5"), mp.mpf(10) ** 10))
    g["J0"] = float(J0())
    g["J"] = {str(m): float(J(m)) for m in (3, 4, 10, 16, 38, 106)}
    g["mu"] = {str(m): float(mu(m)) for m in range(1, 9)}
    g["nu"] = {str(m): float(nu(m)) for m in range(1, 9)}
    g["fm_ratios"] = {str(m): fm_l2_over_l1(m, 2) for m in range(1, 7)}
    pts = [(5.3418, 1, 62.5, 16, 1e10), (4.3060, 1.9, 80.8, 38, 1e32),
           (19.228, 1e-4, 514998, 14, 5e4), (3.9513, 10, 42.3, 106, 1e100)]
    g["log_r_terms"] = [
        {"point": list(p), "log": [float(mp.log(t)) for t in r_terms(*p)]} for p in pts]
    g["tilde_alpha_62.5_1e10_1"] = float(tilde_alpha(62.5, 1e10, 1))
    g["tilde_H_16_1e10_1_0.057"] = float(tilde_H(16, 1e10, 1, 0.057))
    g["tilde_m_1e10_1_0.057"] = float(tilde_m(1e10, 1, 0.057))
    g["tilde_H_11_5e4_10_0.037"] = float(tilde_H(11, 5e4, 10, 0.037))
    g["laplace"] = []
    for s, L, eps, m in [(0.5, 0.0, 1.0, 3), (complex(0.3, 7.0), 0.0, 1.0, 6),
                         (complex(0.0, 7.5288), 0.0, 1.0, 6), (complex(1.0, 40.0), 2.0, 0.5, 10)]:
        F = laplace(s, L, eps, m)
        g["laplace"].append({"s": [complex(s).real, complex(s).imag], "L": L, "eps": eps,
                             "m": m, "F": [float(F.real), float(F.imag)]})
    g["clustering_root"] = float(clustering_root())
    g["inequality_root"] = float(inequality_root())
    g["kappa0_cubed_70341"] = float(kappa0_cubed(70341))
    g["y0_log_71000"] = float(mp.mpf(71000) / 3 - 4 * mp.log(C2 * 71000) - mp.log(1 + C3 ** 6 / 2) / 3)
    g["pi"] = {"1000000": int(sympy.primepi(10 ** 6)), "10000000": int(sympy.primepi(10 ** 7))}
    g["theta_10_3_1"] = float(mp.log(7))
    g["theta_10_3_2"] = float(mp.log(10))
    g["least_prime"] = {f"{q},{a}": int(next(p for p in sympy.primerange(2, 10 ** 6) if p % q == a))
                        for q, a in ((4, 3), (13, 1), (71, 1), (72, 71), (997, 1))}
    dp = min_cubes_dp(20000)
    g["min_cubes_small"] = {str(n): dp[n] for n in (15, 22, 23, 239, 454, 455, 8042, 19999)}
    g["needs_8_or_more_below_20000"] = [n for n in range(20001) if dp[n] >= 8]
    g["phi_ratio_bound_30030"] = float(mp.exp(EC) * mp.log(mp.log(30030)) + mp.mpf("2.51") / mp.log(mp.log(30030)))
    return g


if __name__ == "__main__":
    out = pathlib.Path(__file__).with_name("golden.json")
    out.write_text(json.dumps(build(), indent=1, sort_keys=True) + "\n")
    print("wrote", out)
