"""The five error terms r1..r5 bounding the smoothed prime sum from below.

Every term is returned as a LogNonNegReal; the decay factors
q^{-alpha log q} are far below the float range for large q.
Each function transcribes one display; summands keep their own names.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from . import logdomain as ld
from .errors import DomainError
from .estimates import (CONSTANTS, AnalyticConstants, inverse_gamma_sum_bound,
                        j_of_m, j_zero, phi_ratio_bound,
                        weighted_inverse_gamma_sum_bound)
from .logdomain import LogNonNegReal
from .weights import log_mu, log_nu

TWO_PI = 2 * math.pi

# r1 variants:
#   two-region        low zeros via the at-most-four-zeros region (R1) plus
#                     the classical region (R) for the four exceptional ones
#   classical         classical region only, each zero decaying with its own
#                     log(q|gamma|)
#   classical-uniform classical region only, log(qH) used for every zero
R1_VARIANTS = ("two-region", "classical", "classical-uniform")


@dataclass(frozen=True)
class ErrorParams:
    alpha: float
    eps: float
    H: float
    m: int
    q: float
    consts: AnalyticConstants = field(default=CONSTANTS)
    variant: str = "two-region"
    # the H-balancing step evaluates r1, r2 at a seed alpha that may sit
    # above the Condalf ceiling; only that step turns the guard off
    enforce_condalf: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.alpha < 0:
            raise DomainError(f"alpha must be >= 0, got {self.alpha!r}")
        if not self.eps > 0:
            raise DomainError(f"eps must be positive, got {self.eps!r}")
        if not self.H >= 1:
            raise DomainError(f"H must be >= 1, got {self.H!r}")
        if int(self.m) != self.m or self.m < 3:
            raise DomainError(f"m must be an integer >= 3, got {self.m!r}")
        if not self.q >= 3:
            raise DomainError(f"q must be >= 3, got {self.q!r}")
        if self.variant not in R1_VARIANTS:
            raise DomainError(f"unknown r1 variant {self.variant!r}")
        if self.enforce_condalf and not self.alpha < condalf_ceiling(self.q, self.H, self.consts.R):
            raise DomainError(
                f"Condalf violated: alpha={self.alpha!r} >= R (log qH / log q)^2 = "
                f"{condalf_ceiling(self.q, self.H, self.consts.R)!r}")

    @property
    def log_q(self):
        return math.log(self.q)

    @property
    def log_qH(self):
        return math.log(self.q) + math.log(self.H)

    @property
    def L(self):
        return self.alpha * self.log_q ** 2


class ErrorBreakdown(NamedTuple):
    r1: LogNonNegReal
    r2: LogNonNegReal
    r3: LogNonNegReal
    r4: LogNonNegReal
    r5: LogNonNegReal
    total: LogNonNegReal


def condalf_ceiling(q: float, H: float, R: float = CONSTANTS.R) -> float:
    """Supremum of admissible alpha: R (log(qH)/log q)^2."""
    return R * ((math.log(q) + math.log(H)) / math.log(q)) ** 2


def b2(alpha: float, r_const: float, q: float) -> LogNonNegReal:
    """1 + q^{-alpha log q + 2 alpha / r}."""
    if q < 3:
        raise DomainError(f"q must be >= 3, got {q!r}")
    lq = math.log(q)
    e = (-alpha * lq + 2 * alpha / r_const) * lq
    if e > 0:
        return ld.from_log(e + math.log1p(math.exp(-e)))
    return ld.from_log(math.log1p(math.exp(e)))


def _low_zero_constant(p: ErrorParams) -> float:
    # zeros with |gamma| <= 1: (1 + a1 pi)/(2 pi) log q - (log(2 pi e) + a2 pi)/(2 pi)
    c = p.consts
    return ((1 + c.a1 * math.pi) / TWO_PI * p.log_q
            - (math.log(TWO_PI * math.e) + c.a2 * math.pi) / TWO_PI)


def _log_or_zero(x: float) -> float:
    # a nonpositive summand of an upper bound may be dropped
    return math.log(x) if x > 0 else -math.inf


def r1(p: ErrorParams) -> LogNonNegReal:
    if p.variant == "two-region":
        return _r1_two_region(p)
    return _r1_classical(p, per_zero=(p.variant == "classical"))


def _r1_two_region(p: ErrorParams) -> LogNonNegReal:
    c = p.consts
    a, m, eps, H = p.alpha, p.m, p.eps, p.H
    lq, lqH = p.log_q, p.log_qH
    b2_low = b2(a, c.R1, p.q).log_value
    b2_cls = b2(a, c.R, p.q).log_value

    # 1 < |gamma| <= H, beta <= 1 - 1/(R1 log qH); bracket is E~(H)
    zeros_to_H = (b2_low + math.log((2 * m + 1) / (2 * eps * m))
                  + math.log(inverse_gamma_sum_bound(H, p.q, c))
                  - a / c.R1 * lq * lq / lqH)
    # |gamma| <= 1, beta <= 1 - 1/(R1 log q)
    zeros_to_1 = b2_low + _log_or_zero(_low_zero_constant(p)) - a / c.R1 * lq
    # the (at most) eight zeros outside the R1 regions, bounded through phi(q)
    eight = (math.log(4) + b2_cls + math.log(phi_ratio_bound(p.q, c))
             + ld.lsum([ld.from_log((-1 - a / c.R) * lq),
                        ld.from_log((-1 - a / c.R * lq / lqH) * lq)]).log_value)
    return ld.lsum(map(ld.from_log, (zeros_to_H, zeros_to_1, eight)))


def _r1_classical(p: ErrorParams, per_zero: bool) -> LogNonNegReal:
    c = p.consts
    a, m, eps, H = p.alpha, p.m, p.eps, p.H
    lq, lqH = p.log_q, p.log_qH
    b2_cls = b2(a, c.R, p.q).log_value
    if per_zero:
        zsum = weighted_inverse_gamma_sum_bound(H, p.q, a * lq * lq / c.R, c)
        low_decay = -a / c.R * lq
    else:
        zsum = inverse_gamma_sum_bound(H, p.q, c)
        low_decay = -a / c.R * lq * lq / lqH
    zeros_to_H = (b2_cls + math.log((2 * m + 1) / (2 * eps * m)) + math.log(zsum)
                  - a / c.R * lq * lq / lqH)
    zeros_to_1 = b2_cls + _log_or_zero(_low_zero_constant(p)) + low_decay
    return ld.lsum(map(ld.from_log, (zeros_to_H, zeros_to_1)))


def _check_r2_support(p: ErrorParams):
    # L <= R log^2(qH) is equivalent to Condalf
    if p.enforce_condalf and not p.L <= p.consts.R * p.log_qH ** 2:
        raise DomainError("L <= R log^2(qH) violated")


def a_tilde(p: ErrorParams) -> LogNonNegReal:
    c, m, H, lqH = p.consts, p.m, p.H, p.log_qH
    _check_r2_support(p)
    if m < 3:
        raise DomainError("A~ needs m >= 3")
    br = math.log(p.q * H / TWO_PI) + 1 / (m - 2) + c.a1 / ((m - 1) * H)
    return ld.from_log(-math.log(math.pi * (m - 2)) - (m - 1) * math.log(H)
                       - p.L / (c.R * lqH) + math.log(br))


def b_tilde(p: ErrorParams) -> LogNonNegReal:
    c, m, H, lqH = p.consts, p.m, p.H, p.log_qH
    _check_r2_support(p)
    return ld.from_log(math.log(2 * (c.a1 * lqH + c.a2)) - m * math.log(H)
                       - p.L / (c.R * lqH))


def c_tilde(p: ErrorParams) -> LogNonNegReal:
    m, H = p.m, p.H
    br = math.log(p.q * H / TWO_PI) + 1 / (m - 1)
    return ld.from_log(-math.log(math.pi * (m - 1)) - (m - 1) * math.log(H) + math.log(br))


def d_tilde(p: ErrorParams) -> LogNonNegReal:
    c, m, H, lqH = p.consts, p.m, p.H, p.log_qH
    return ld.from_log(math.log(2 * c.a1 * lqH + 2 * c.a2 + c.a1 / m) - m * math.log(H))


def r2(p: ErrorParams) -> LogNonNegReal:
    c = p.consts
    a, m, eps, H = p.alpha, p.m, p.eps, p.H
    lq, lqH = p.log_q, p.log_qH
    _check_r2_support(p)
    prefactor = log_mu(m) - m * math.log(H * eps)
    lq2pi = math.log(p.q * H / TWO_PI)
    first = (H * lq2pi / (TWO_PI * (m - 2))
             + H / (TWO_PI * (m - 2) ** 2)
             + c.a1 / (TWO_PI * (m - 2) * (m - 1))
             + c.a1 * lqH + c.a2)
    second = (H / (TWO_PI * (m - 1)) * (lq2pi + 1 / (m - 1))
              + c.a1 * lqH + c.a2 + c.a1 / (2 * m))
    t1 = -a / c.R * lq * lq / lqH + prefactor + math.log(first)
    t2 = (-a * lq + a / c.R * lq / lqH) * lq + prefactor + math.log(second)
    return ld.lsum([ld.from_log(t1), ld.from_log(t2)])


def r3(p: ErrorParams) -> LogNonNegReal:
    m, eps = p.m, p.eps
    inner = ld.lsum([ld.from_linear(j_zero()),
                     ld.from_log(log_mu(m) + math.log(j_of_m(m)) - m * math.log(eps))])
    return ld.from_log(inner.log_value - math.log(TWO_PI) - p.alpha / 2 * p.log_q ** 2)


def r4(p: ErrorParams) -> LogNonNegReal:
    return ld.from_log(math.log(2.10) + log_nu(p.m) - math.log(p.eps)
                       - p.alpha * p.log_q ** 2)


def r5(p: ErrorParams) -> LogNonNegReal:
    return ld.from_log(log_nu(p.m) - math.log(p.eps)
                       + math.log(p.alpha * p.log_q ** 2 + p.eps)
                       - p.alpha * p.log_q ** 2)


def r_total(p: ErrorParams) -> ErrorBreakdown:
    parts = (r1(p), r2(p), r3(p), r4(p), r5(p))
    return ErrorBreakdown(*parts, ld.lsum(parts))


def log_r(p: ErrorParams) -> float:
    return r_total(p).total.log_value
