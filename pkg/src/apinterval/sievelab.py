"""Desk-scale checks on primes: theta in progressions, least primes, and
the prime-sum constants the error terms lean on."""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .errors import DomainError, ResourceError
from .estimates import CONSTANTS, phi_ratio_bound
from .weights import WeightSpec, f_eval

SIEVE_GUARD = 10 ** 9
THETA_CONST = 2.072


@dataclass(frozen=True)
class SieveResult:
    limit: int
    primes: np.ndarray = field(repr=False)

    def pi(self, x) -> int:
        return int(np.searchsorted(self.primes, int(x), side="right"))


@dataclass
class VerificationReport:
    name: str
    params: dict
    max_deviation: float
    bound: float
    witness: dict
    passed: bool
    details: dict = field(default_factory=dict)

    def as_dict(self):
        return {"name": self.name, "params": self.params, "max_deviation": self.max_deviation,
                "bound": self.bound, "witness": self.witness, "pass": self.passed,
                "details": self.details}


def sieve(limit: int, guard: int = SIEVE_GUARD) -> SieveResult:
    limit = int(limit)
    if limit > guard:
        raise ResourceError(f"sieve limit {limit} exceeds guard {guard}")
    return SieveResult(limit, kernels.primes_upto(limit))


def _check_class(q, a):
    if q < 1:
        raise DomainError(f"modulus must be positive, got {q!r}")
    if math.gcd(a, q) != 1:
        raise DomainError(f"gcd({a}, {q}) != 1")


def totient(q: int) -> int:
    return sum(1 for a in range(1, q + 1) if math.gcd(a, q) == 1)


def theta(y: float, q: int, a: int, s: SieveResult) -> float:
    """sum of log p over primes p <= y, p = a mod q."""
    _check_class(q, a)
    if y > s.limit:
        raise ResourceError(f"y={y} beyond sieve limit {s.limit}")
    ps = s.primes[: s.pi(math.floor(y))]
    sel = ps[ps % q == a % q]
    return math.fsum(np.log(sel.astype(np.float64)))


def theta_deviation_scan(q_max: int = 72, x_max: float = 1e7,
                         s: Optional[SieveResult] = None, bound: float = THETA_CONST,
                         progress=None) -> VerificationReport:
    """Largest |theta(y;q,a) - y/phi(q)| / sqrt(y) over q <= q_max, coprime a,
    and every breakpoint y <= x_max.

    Since sqrt is increasing, the claim "sup_{y<=x} |dev| <= c sqrt(x) for all
    x <= x_max" holds exactly when this number is <= c.
    """
    if s is None:
        s = sieve(int(x_max))
    if x_max > s.limit:
        raise ResourceError(f"x_max={x_max} beyond sieve limit {s.limit}")
    worst = (0.0, None, None, None)
    per_q = {}
    peak_over_root_x = 0.0
    for q in range(1, q_max + 1):
        phi_q = totient(q)
        ratio, where, _, peak = kernels.theta_scan(s.primes, q, float(phi_q), float(x_max))
        cop = [a for a in range(q) if math.gcd(a, q) == 1]
        a_best = max(cop, key=lambda a: ratio[a])
        per_q[q] = float(ratio[a_best])
        peak_over_root_x = max(peak_over_root_x, max(peak[a] for a in cop) / math.sqrt(x_max))
        if ratio[a_best] > worst[0]:
            worst = (float(ratio[a_best]), q, a_best, float(where[a_best]))
        if progress:
            progress(f"q={q} max ratio {ratio[a_best]:.6f}")
    return VerificationReport(
        name="theta-deviation",
        params={"q_max": q_max, "x_max": x_max},
        max_deviation=worst[0], bound=bound,
        witness={"q": worst[1], "a": worst[2], "y": worst[3]},
        passed=worst[0] <= bound,
        details={"per_q": per_q, "max_dev_over_sqrt_xmax": peak_over_root_x})


def least_prime_in_ap(q: int, a: int, s: SieveResult) -> Optional[int]:
    """Smallest prime = a mod q up to the sieve limit, else None."""
    _check_class(q, a)
    ps = s.primes
    hit = np.flatnonzero(ps % q == a % q)
    return int(ps[hit[0]]) if len(hit) else None


def weighted_prime_sum(q: int, a: int, spec: WeightSpec, s: SieveResult) -> float:
    """sum over p = a mod q of (log p / p) f(log p)."""
    _check_class(q, a)
    top = math.exp(spec.L + spec.eps)
    if top > s.limit:
        raise ResourceError(f"weight support reaches {top:.6g} > sieve limit {s.limit}")
    ps = s.primes
    lo = bisect.bisect_left(ps, math.exp(spec.L))
    hi = bisect.bisect_right(ps, top)
    terms = []
    for p in ps[lo:hi]:
        p = int(p)
        if p % q == a % q:
            lp = math.log(p)
            terms.append(lp / p * f_eval(lp, spec))
    return math.fsum(terms)


def _series_210(s: SieveResult):
    p = s.primes.astype(np.float64)
    terms = np.log(p) * (1 / (p - 1) ** 2 + 1 / (p - 1) ** 3)
    partial = np.cumsum(terms)
    P = float(s.limit)
    tail = 4 * math.log(P) / P
    total = math.fsum(terms) + tail
    increasing = bool(np.all(np.diff(partial) > 0))
    return VerificationReport(
        name="prime-series-2.10", params={"P": s.limit},
        max_deviation=total, bound=2.10,
        witness={"partial_sum": float(partial[-1]), "tail_bound": tail,
                 "partial_at_1000": float(partial[s.pi(1000) - 1])},
        passed=increasing and total <= 2.10)


def _log_over_pminus1(s: SieveResult):
    p = s.primes.astype(np.float64)
    partial = np.cumsum(np.log(p) / (p - 1))
    slack = 2 * np.log(p) - partial
    j = int(np.argmin(slack))
    top = 2 * math.log(s.limit)
    return VerificationReport(
        name="log-p-over-p-minus-1", params={"x_max": s.limit},
        max_deviation=float(np.max(partial / (2 * np.log(p)))), bound=1.0,
        witness={"tightest_x": int(s.primes[j]), "slack": float(slack[j]),
                 "sum_at_limit": float(partial[-1]), "bound_at_limit": top},
        passed=bool(np.all(slack >= 0)))


def totients_upto(N: int, s: SieveResult) -> np.ndarray:
    phi = np.arange(N + 1, dtype=np.int64)
    for p in s.primes:
        p = int(p)
        if p > N:
            break
        phi[p::p] -= phi[p::p] // p
    return phi


def _phi_ratio(s: SieveResult, q_max: int = 10 ** 6):
    q_max = min(q_max, s.limit)
    phi = totients_upto(q_max, s)
    q = np.arange(3, q_max + 1)
    ratio = q / phi[3:]
    ll = np.log(np.log(q))
    bound = math.exp(CONSTANTS.euler_gamma) * ll + 2.51 / ll
    use = ratio / bound
    j = int(np.argmax(use))
    qw = int(q[j])
    return VerificationReport(
        name="phi-ratio", params={"q_max": q_max},
        max_deviation=float(use[j]), bound=1.0,
        witness={"q": qw, "q_over_phi": float(ratio[j]),
                 "bound": phi_ratio_bound(qw)},
        passed=bool(np.all(ratio < bound)))


def auxiliary_constant_checks(s: SieveResult):
    if s.limit < 10 ** 6:
        raise DomainError("auxiliary checks need a sieve to at least 1e6")
    return [_series_210(s), _log_over_pminus1(s), _phi_ratio(s)]
