"""Zero-region constants, zero-counting bounds and the gamma-factor integrals.

All logarithms are natural.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from scipy.integrate import quad

from .errors import DomainError


@dataclass(frozen=True)
class AnalyticConstants:
    R: float = 6.50
    R1: float = 3.82
    R2: float = 2.05
    a1: float = 0.92
    a2: float = 5.37
    euler_gamma: float = 0.5772156649

    def __post_init__(self):
        if not (self.R > self.R1 > self.R2 > 0):
            raise DomainError("zero-region constants must satisfy R > R1 > R2 > 0")
        if self.a1 <= 0 or self.a2 <= 0:
            raise DomainError("a1, a2 must be positive")


CONSTANTS = AnalyticConstants()

_TWO_PI = 2 * math.pi


def _check_Tq(T, q):
    if T < 1:
        raise DomainError(f"zero counts need T >= 1, got {T!r}")
    if q < 3:
        raise DomainError(f"modulus must be >= 3, got {q!r}")


def zero_count_main(T: float, q: float) -> float:
    """Main term (T/pi) log(qT / (2 pi e)) of the zero count N(T, chi)."""
    _check_Tq(T, q)
    return T / math.pi * (math.log(q) + math.log(T) - math.log(_TWO_PI * math.e))


def zero_count_upper(T: float, q: float, c: AnalyticConstants = CONSTANTS) -> float:
    _check_Tq(T, q)
    return zero_count_main(T, q) + c.a1 * (math.log(q) + math.log(T)) + c.a2


def inverse_gamma_sum_bound(H: float, q: float, c: AnalyticConstants = CONSTANTS) -> float:
    """Upper bound for the sum of 1/|gamma| over zeros with 1 < |gamma| < H."""
    if H < 1:
        raise DomainError(f"H must be >= 1, got {H!r}")
    if q < 3:
        raise DomainError(f"modulus must be >= 3, got {q!r}")
    lq, lH = math.log(q), math.log(H)
    return (lq * lH / math.pi
            + lH * lH / (2 * math.pi)
            + (1 / math.pi + c.a1) * lq
            - math.log(_TWO_PI) / math.pi * lH
            - math.log(_TWO_PI * math.e) / math.pi + c.a2 + c.a1
            - c.a1 / H)


def weighted_inverse_gamma_sum_bound(H: float, q: float, kappa: float,
                                     c: AnalyticConstants = CONSTANTS) -> float:
    """Bound for sum over 1 < |gamma| <= H of w(|gamma|)/|gamma|, where
    w(t) = exp(kappa (1/log(qH) - 1/log(qt))) <= 1.

    Stieltjes integration against N(t) = P(t) + r(t), |r| <= a1 log(qt) + a2:

        int P'(t) w/t dt + (w/t)(H) R(H) + (w/t)(1) R(1) + int R |(w/t)'| dt.

    With kappa = 0 this is a crude variant of ``inverse_gamma_sum_bound``.
    Computed in s = log t.
    """
    if H < 1:
        raise DomainError(f"H must be >= 1, got {H!r}")
    lq = math.log(q)
    sH = math.log(H)
    lqH = lq + sH

    def w(s):
        return math.exp(kappa * (1.0 / lqH - 1.0 / (lq + s)))

    def Rt(s):
        return c.a1 * (lq + s) + c.a2

    def main(s):
        return (lq + s - math.log(_TWO_PI)) / math.pi * w(s)

    def var(s):
        ws = w(s)
        return Rt(s) * abs(ws * kappa / (lq + s) ** 2 - ws) * math.exp(-s)

    if sH == 0:
        return 2 * Rt(0.0) * w(0.0)
    i_main = quad(main, 0.0, sH, epsabs=0, epsrel=1e-10, limit=200)[0]
    i_var = quad(var, 0.0, sH, epsabs=0, epsrel=1e-10, limit=200)[0]
    return i_main + w(sH) * Rt(sH) / H + w(0.0) * Rt(0.0) + i_var


def gamma_bound(T: float) -> float:
    if T < 0:
        raise DomainError(f"T must be >= 0, got {T!r}")
    return math.log(6 * (T + 12))


def j_zero() -> float:
    # antiderivative (T+12) log(6(T+12)) - T on [0, 1], doubled for |T| <= 1
    return 2 * ((13 * math.log(78) - 13) - (12 * math.log(72) - 12))


def _j_tail(m: int, T: float) -> float:
    # log(6(t+12)) <= log(6(T+12)) + log(t/T) for t >= T
    return T ** (1 - m) * (math.log(6 * (T + 12)) / (m - 1) + 1 / (m - 1) ** 2)


@lru_cache(maxsize=None)
def j_of_m(m: int, tail_tol: float = 1e-12) -> float:
    """2 * int_1^inf log(6(T+12)) / T**m dT.

    Quadrature in s = log T up to a cutoff where the analytic tail bound is
    below ``tail_tol``; the tail bound is added, so the value is an upper
    estimate accurate to ~1e-10 relative.
    """
    if m < 2:
        raise DomainError(f"J(m) diverges for m < 2, got {m!r}")
    T = 2.0
    while _j_tail(m, T) > tail_tol:
        T *= 2
    body = quad(lambda s: math.log(6 * (math.exp(s) + 12)) * math.exp((1 - m) * s),
                0.0, math.log(T), epsabs=0, epsrel=1e-12, limit=400)[0]
    return 2 * (body + _j_tail(m, T))


def phi_lower_bound(q: float, c: AnalyticConstants = CONSTANTS) -> float:
    """Lower bound q / (e^C loglog q + 2.51/loglog q) for Euler's phi(q)."""
    if q < 3:
        raise DomainError(f"modulus must be >= 3, got {q!r}")
    return q / phi_ratio_bound(q, c)


def phi_ratio_bound(q: float, c: AnalyticConstants = CONSTANTS) -> float:
    """Upper bound for q/phi(q), valid for q >= 3."""
    if q < 3:
        raise DomainError(f"modulus must be >= 3, got {q!r}")
    ll = math.log(math.log(q))
    return math.exp(c.euler_gamma) * ll + 2.51 / ll
