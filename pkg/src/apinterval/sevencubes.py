"""Sums of seven cubes: Watson's sufficient conditions, building instances
for a given n, and the thresholds on log n where a prime a is guaranteed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np
from scipy.optimize import brentq
from sympy import integer_nthroot, isprime, nextprime
from sympy.ntheory.modular import crt
from sympy.solvers.diophantine.diophantine import sum_of_three_squares

from . import kernels
from .errors import DomainError, InfeasibleError, ResourceError


@dataclass(frozen=True)
class SevenCubesParams:
    c1: float = 0.521
    c2: float = 2.562
    alpha: float = 4.3060
    eps: float = 1.9
    k_min: float = 1e32
    theta_const: float = 2.072

    def __post_init__(self):
        if not self.c2 - self.c1 > 2:
            raise DomainError("need c2 - c1 > phi(6) = 2")
        if not 0 < self.c1 < self.c2:
            raise DomainError("need 0 < c1 < c2")

    @property
    def c3(self):
        return math.sqrt(self.c2 / self.c1)


PARAMS = SevenCubesParams()


@dataclass(frozen=True)
class WatsonInstance:
    n: int
    a: int
    u: int
    v: int
    w: int
    t: int

    def __post_init__(self):
        for name in ("n", "a", "u", "v", "w"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be a positive integer")
        if self.t < 0:
            raise DomainError("t must be nonnegative")

    @property
    def delta(self) -> Fraction:
        u, v, w = self.u, self.v, self.w
        return (1 + Fraction(w, u) ** 6 + Fraction(w, v) ** 6) / 4

    @property
    def rho(self) -> Fraction:
        return Fraction(1, 6 * self.u * self.v * self.w * self.a)

    @property
    def S(self) -> int:
        u6, v6, w6 = self.u ** 6, self.v ** 6, self.w ** 6
        return u6 * v6 + u6 * w6 + v6 * w6


class Verdict(NamedTuple):
    ok: bool
    failed: Optional[int]   # number of the first failing condition

    def __bool__(self):
        return self.ok


def _cond1(i):
    u, v, w = i.u, i.v, i.w
    # w <= (3/4)^(1/3) uv / 24  <=>  24^3 w^3 <= (3/4) (uv)^3
    return 1 <= u <= v <= w and 4 * (24 * w) ** 3 <= 3 * (u * v) ** 3


def _cond2(i):
    return math.gcd(i.u * i.v * i.w, 6 * i.n) == 1 and i.a % 2 == 1


def _cond3(i):
    xs = (i.u, i.v, i.w, i.a)
    return all(math.gcd(x, y) == 1 for k, x in enumerate(xs) for y in xs[k + 1:])


def _cond4(i):
    return (i.n - i.t ** 3) % 2 == 1


def _cond5(i):
    return (i.n - i.t ** 3) % (3 * i.a) == 0


def _cond6(i):
    d = 4 * (i.n - i.t ** 3)
    u, v, w, a3 = i.u, i.v, i.w, i.a ** 3
    return ((d - (v * w) ** 6 * a3) % (u * u) == 0
            and (d - (u * w) ** 6 * a3) % (v * v) == 0
            and (d - (u * v) ** 6 * a3) % (w * w) == 0)


def _cond7(i):
    # cubing the double inequality and clearing u^6 v^6 a^3:
    #   a^3 S <= 4(n - t^3) <= a^3 (S + 3 u^6 v^6)
    # and the leftmost "0 <=" is 4n >= a^3 (S + 3 u^6 v^6)
    a3, uv6 = i.a ** 3, (i.u * i.v) ** 6
    d = 4 * (i.n - i.t ** 3)
    return 4 * i.n >= a3 * (i.S + 3 * uv6) and a3 * i.S <= d <= a3 * (i.S + 3 * uv6)


_CONDITIONS = (_cond1, _cond2, _cond3, _cond4, _cond5, _cond6, _cond7)


def watson_check(inst: WatsonInstance) -> Verdict:
    for k, cond in enumerate(_CONDITIONS, 1):
        if not cond(inst):
            return Verdict(False, k)
    return Verdict(True, None)


def cube_root_mod_p2(x: int, p: int) -> int:
    """y with y^3 = x mod p^2, for a prime p = 2 mod 3 not dividing x.

    Cubing is a bijection on (Z/p^2)^* since 3 does not divide p(p-1).
    """
    if p % 3 != 2:
        raise DomainError(f"p must be 2 mod 3, got {p}")
    if x % p == 0:
        raise DomainError(f"{x} is not invertible mod {p}^2")
    e = pow(3, -1, p * (p - 1))
    return pow(x, e, p * p)


def cube_root_mod_prime(x: int, p: int) -> int:
    if p % 3 != 2:
        raise DomainError(f"p must be 2 mod 3, got {p}")
    return pow(x % p, pow(3, -1, p - 1), p)


def window(n: int, u: int, v: int, w: int):
    """Y and kappa of the window [Y/kappa, Y] for the prime a (floats).

    rho depends on a; the bound a >= Y/kappa is fed back once.
    """
    delta = (1 + (w / u) ** 6 + (w / v) ** 6) / 4
    logY = math.log(n) / 3 - 2 * math.log(u * v) - math.log(0.75 + delta) / 3

    def kappa(rho):
        return (((u * v / (24 * w * (rho + 1))) ** 1.5 + delta) / (0.75 + delta)) ** (1 / 3)

    k = kappa(0.0)
    rho = k * math.exp(-logY) / (6 * u * v * w)
    return logY, kappa(rho)


def _t_for(n, a, u, v, w):
    uvw = u * v * w
    r_a = cube_root_mod_prime(n, a)
    t0, mod = crt([a, 3, 2, uvw], [r_a, n % 3, (n - 1) % 2, 0])
    return int(t0), int(mod)


def _t_in_window(n, a, u, v, w):
    """Smallest admissible t satisfying condition (7), or None."""
    inst = WatsonInstance(n, a, u, v, w, 0)
    a3, S, uv6 = a ** 3, inst.S, (u * v) ** 6
    hi_cube = (4 * n - a3 * S) // 4           # t^3 <= n - a^3 S / 4
    lo_cube = n - a3 * (S + 3 * uv6) // 4     # t^3 >= n - a^3 (S + 3 u^6 v^6)/4, rounded safe
    if hi_cube < 0:
        return None
    lo_cube = max(lo_cube, 0)
    t_hi = integer_nthroot(hi_cube, 3)[0]
    r, exact = integer_nthroot(lo_cube, 3)
    t_lo = r if exact else r + 1
    t0, mod = _t_for(n, a, u, v, w)
    t = t_lo + (t0 - t_lo) % mod
    if t > t_hi:
        return None
    cand = WatsonInstance(n, a, u, v, w, t)
    return t if _cond7(cand) else None


def construct_instance(n: int, u: int, v: int, w: int, max_candidates: int = 10 ** 6) -> WatsonInstance:
    """Find a prime a and t such that (n, a, u, v, w, t) meets Watson's conditions.

    a' comes from the three cube congruences by CRT; a runs over primes
    a = a' mod u^2 v^2 w^2, a = 5 mod 6 in [Y/kappa, Y]; t is then fixed by
    CRT mod 6auvw and placed in the window of condition (7).
    """
    n = int(n)
    for p in (u, v, w):
        if not isprime(p) or p % 6 != 5:
            raise DomainError(f"{p} is not a prime = 5 mod 6")
    if len({u, v, w}) != 3:
        raise DomainError("u, v, w must be distinct")
    u, v, w = sorted((u, v, w))
    if math.gcd(u * v * w, 6 * n) != 1:
        raise DomainError("u v w must be coprime to 6n")
    if not _cond1(WatsonInstance(n, 1, u, v, w, 0)):
        raise InfeasibleError("u, v, w violate condition (1)", stage="(1)")

    # 4n = (a' * B)^3 mod p^2 with B the square of the other two
    mods, rems = [], []
    for p, others in ((u, v * w), (v, u * w), (w, u * v)):
        p2 = p * p
        y = cube_root_mod_p2(4 * n, p)
        rems.append(y * pow(others * others, -1, p2) % p2)
        mods.append(p2)
    a_prime, m_uvw = crt(mods, rems)
    a_res, modulus = crt([int(m_uvw), 6], [int(a_prime), 5])
    a_res, modulus = int(a_res), int(modulus)

    logY, kappa = window(n, u, v, w)
    lo = max(1, _exp_int(logY - math.log(kappa)))
    Y_hi = _exp_int(logY) + 1
    a = lo + (a_res - lo) % modulus
    tried = 0
    while a <= Y_hi and tried < max_candidates:
        if isprime(a) and a not in (u, v, w):
            t = _t_in_window(n, a, u, v, w)
            if t is not None:
                inst = WatsonInstance(n, a, u, v, w, t)
                if watson_check(inst):
                    return inst
        a += modulus
        tried += 1
    raise InfeasibleError(f"no prime a in the window [{lo}, {Y_hi}] (checked {tried})", stage="C2")


def _exp_int(x: float) -> int:
    # e^x as an integer, exact in the leading ~15 digits, for x past float range
    k = int(x / math.log(2)) - 52
    if k <= 0:
        return int(math.exp(x))
    return int(math.exp(x - k * math.log(2))) << k


def seven_cube_witness(inst: WatsonInstance):
    """Seven nonnegative integers whose cubes sum to n, for an instance that
    passes ``watson_check``.

    With M = (4(n-t^3) - a^3 S) / (3a u^2v^2w^2), which is 3 mod 8, write
    M = y1^2 + y2^2 + y3^2 (all odd); then
    n = t^3 + sum over (p, P) in {(u, av^2w^2), (v, au^2w^2), (w, au^2v^2)}
        of ((P + p y)/2)^3 + ((P - p y)/2)^3.
    """
    if not watson_check(inst):
        raise DomainError(f"instance fails condition {watson_check(inst).failed}")
    n, a, u, v, w, t = inst.n, inst.a, inst.u, inst.v, inst.w, inst.t
    num = 4 * (n - t ** 3) - a ** 3 * inst.S
    den = 3 * a * (u * v * w) ** 2
    M, rem = divmod(num, den)
    if rem or M % 8 != 3:
        raise AssertionError("M is not an integer = 3 mod 8")
    ys = sum_of_three_squares(M) if M > 0 else None
    if ys is None:
        raise AssertionError("no three-square representation")
    cubes = [t]
    for (p, P), y in zip(((u, a * (v * w) ** 2), (v, a * (u * w) ** 2), (w, a * (u * v) ** 2)), ys):
        cubes += [(P + p * y) // 2, (P - p * y) // 2]
    if min(cubes) < 0 or sum(c ** 3 for c in cubes) != n:
        raise AssertionError("witness does not sum to n")
    return cubes


def primes_5mod6_coprime(n: int, start: int, count: int):
    out, p = [], start - 1
    while len(out) < count:
        p = nextprime(p)
        if p % 6 == 5 and n % p:
            out.append(p)
    return out


def pick_uvw(n: int, start: int = 41):
    """Three primes = 5 mod 6, coprime to n, meeting condition (1)."""
    ps = primes_5mod6_coprime(n, start, 12)
    for i, u in enumerate(ps):
        for j in range(i + 1, len(ps)):
            for k in range(j + 1, len(ps)):
                v, w = ps[j], ps[k]
                if _cond1(WatsonInstance(n, 1, u, v, w, 0)):
                    return u, v, w
    raise InfeasibleError("no u, v, w triple among the first primes", stage="(1)")


def min_n_for_conditions(u_max: int = 200) -> int:
    """Smallest n for which conditions (1) and (7) can both hold, over
    pairwise coprime u <= v <= w <= u_max and odd a >= 1.

    From (7), n >= a^3 (S + 3 u^6 v^6)/4 >= (S + 3 u^6 v^6)/4.
    """
    best = None
    for u in range(1, u_max + 1):
        for v in range(u, u_max + 1):
            wmax = int(((3 / 4) ** (1 / 3)) * u * v / 24)
            for w in range(v, min(wmax, u_max) + 1):
                if math.gcd(u, v) * math.gcd(u, w) * math.gcd(v, w) != 1:
                    continue
                if not _cond1(WatsonInstance(1, 1, u, v, w, 0)):
                    continue
                S = (u * v) ** 6 + (u * w) ** 6 + (v * w) ** 6
                val = -(-(S + 3 * (u * v) ** 6) // 4)
                if best is None or val < best:
                    best = val
                break   # w = v is smallest for this (u, v)
    return best


# thresholds on x = log n -------------------------------------------------

def kappa0_cubed(log_n: float, p: SevenCubesParams = PARAMS) -> float:
    if not log_n > 0:
        raise DomainError("log_n must be positive")
    c1, c3 = p.c1, p.c3
    A = c1 * log_n
    inner = (A / (24 * c3 * (1 / (6 * A ** 3) + 1))) ** 1.5 + 0.25 + 1 / (2 * c3 ** 6)
    return inner / (1 + c3 ** 6 / 2)


def y0_log(log_n: float, p: SevenCubesParams = PARAMS) -> float:
    if not log_n > 0:
        raise DomainError("log_n must be positive")
    return log_n / 3 - 4 * math.log(p.c2 * log_n) - math.log(1 + p.c3 ** 6 / 2) / 3


def clustering_gap(x: float, p: SevenCubesParams = PARAMS) -> float:
    """LHS - RHS of the clustering inequality at log n = x."""
    c1, c2 = p.c1, p.c2
    return (((c2 - c1) / 2 - 1) * x - p.theta_const * (math.sqrt(c1) + math.sqrt(c2)) * math.sqrt(x)
            - 12 * math.log(c2 * x))


def inequality_gap(x: float, p: SevenCubesParams = PARAMS) -> float:
    """y0_log(x) - (alpha log^2(3 (c2 x)^6) + eps)."""
    return y0_log(x, p) - (p.alpha * math.log(3 * (p.c2 * x) ** 6) ** 2 + p.eps)


def repulsion_margin(log_n: float, p: SevenCubesParams = PARAMS) -> float:
    """2.12 log(3 (c1 x)^6) - log(3 (c2 x)^6); positive means k1^2.12 > k2."""
    x = log_n
    return 2.12 * math.log(3 * (p.c1 * x) ** 6) - math.log(3 * (p.c2 * x) ** 6)


def _first_integer(gap, lo, hi):
    """Least integer x in (lo, hi] with gap(x) >= 0 and gap >= 0 beyond it
    (gap is increasing on the bracket)."""
    if gap(hi) < 0 or gap(lo) >= 0:
        raise DomainError(f"no crossing in [{lo}, {hi}]")
    root = brentq(gap, lo, hi, xtol=1e-9)
    x = math.ceil(root)
    while gap(x) < 0:
        x += 1
    while x - 1 > lo and gap(x - 1) >= 0:
        x -= 1
    return x, root


def clustering_threshold(p: SevenCubesParams = PARAMS) -> int:
    return _first_integer(lambda x: clustering_gap(x, p), 1e3, 1e7)[0]


def _modulus_threshold(c, p):
    # least integer x with 3 (c x)^6 >= k_min
    x = math.ceil((p.k_min / 3) ** (1 / 6) / c)
    while 3 * (c * x) ** 6 < p.k_min:
        x += 1
    while 3 * (c * (x - 1)) ** 6 >= p.k_min:
        x -= 1
    return x


def _kappa_threshold(p):
    target = math.exp(3 * p.eps)
    return _first_integer(lambda x: kappa0_cubed(x, p) - target, 1.0, 1e7)[0]


class Thresholds(NamedTuple):
    clustering: int
    clustering_root: float
    inequality: int
    inequality_root: float
    kappa: int
    modulus_c1: int
    modulus_c2: int
    combined_c2: int
    combined_c1: int
    headline: int
    margins: dict

    def as_dict(self):
        return self._asdict()


def n0_threshold(p: SevenCubesParams = PARAMS, headline: int = 71000) -> Thresholds:
    """All thresholds on log n and their combination.

    The modulus floor 3(uvw)^2 >= k_min is read two ways: with u, v, w at
    their smallest (c1 log n) and at their largest (c2 log n). ``combined_c2``
    is the max of clustering, inequality, kappa and the c2 reading;
    ``combined_c1`` uses the c1 reading instead.
    """
    if not (p.alpha > 0 and p.eps > 0 and p.k_min >= 3):
        raise DomainError("alpha, eps must be positive and k_min >= 3")
    clus, clus_root = _first_integer(lambda x: clustering_gap(x, p), 1e3, 1e7)
    ineq, ineq_root = _first_integer(lambda x: inequality_gap(x, p), 1e3, 1e7)
    kap = _kappa_threshold(p)
    mod1, mod2 = _modulus_threshold(p.c1, p), _modulus_threshold(p.c2, p)
    comb2 = max(clus, ineq, kap, mod2)
    comb1 = max(clus, ineq, kap, mod1)
    margins = {
        "inequality_gap_at_headline": inequality_gap(headline, p),
        "clustering_gap_at_headline": clustering_gap(headline, p),
        "log_kappa0_minus_eps_at_inequality": math.log(kappa0_cubed(ineq, p)) / 3 - p.eps,
        "log10_modulus_c1_at_inequality": math.log10(3) + 6 * math.log10(p.c1 * ineq),
        "log10_modulus_c2_at_inequality": math.log10(3) + 6 * math.log10(p.c2 * ineq),
        "repulsion_at_headline": repulsion_margin(headline, p),
        "y0_log_at_headline": y0_log(headline, p),
    }
    return Thresholds(clus, clus_root, ineq, ineq_root, kap, mod1, mod2, comb2, comb1,
                      headline, margins)


# exhaustive search -------------------------------------------------------

BRUTE_MAX = 10 ** 8
TABLE_MAX = 2 * 10 ** 6

_table_cache = {}


def min_cubes_table(N: int, cap: int = 9) -> np.ndarray:
    key = (N, cap)
    if key not in _table_cache:
        _table_cache.clear()
        _table_cache[key] = kernels.min_cubes_table(N, cap)
    return _table_cache[key]


def brute_force_min_cubes(n: int, cap: int = 9, table_max: int = TABLE_MAX) -> Optional[int]:
    """Least k <= cap with n a sum of k nonnegative cubes, or None if more
    than cap are needed.

    Descends over the largest cube and reads the remainder from a
    precomputed table once it drops below ``table_max``.
    """
    n, cap = int(n), int(cap)
    if n < 0 or n > BRUTE_MAX:
        raise ResourceError(f"n must lie in [0, {BRUTE_MAX}], got {n}")
    if not 0 <= cap <= 9:
        raise DomainError("cap must lie in [0, 9]")
    N = min(max(n, 1), table_max)
    table = min_cubes_table(N, 9)

    def best(r, budget):
        if r <= N:
            k = int(table[r])
            return k if k <= budget else None
        found = None
        limit = budget - 1          # cubes allowed after this one
        c = integer_nthroot(r, 3)[0]
        while c > 0 and limit >= 0:
            c3 = c ** 3
            # the rest needs at most `limit` cubes, each <= c^3
            if limit * c3 < r - c3:
                break
            sub = best(r - c3, limit)
            if sub is not None:
                found = sub + 1
                limit = sub - 1     # only a strictly better split is useful now
            c -= 1
        return found

    return best(n, cap)
