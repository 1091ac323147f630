"""The polynomial bump weight f(t) = (t-L)^m (L+eps-t)^m and its Laplace transform."""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple, Optional

from scipy.integrate import IntegrationWarning, quad

from . import logdomain as ld
from .errors import DomainError
from .logdomain import LogNonNegReal

M_MAX = 200


@dataclass(frozen=True)
class WeightSpec:
    L: float
    eps: float
    m: int

    def __post_init__(self):
        # L = 0 is allowed for tests; production uses L = alpha log^2 q > 0
        if not self.L >= 0:
            raise DomainError(f"L must be >= 0, got {self.L!r}")
        if not self.eps > 0:
            raise DomainError(f"eps must be positive, got {self.eps!r}")
        if int(self.m) != self.m or self.m < 1:
            raise DomainError(f"m must be a positive integer, got {self.m!r}")


def f_eval(t: float, spec: WeightSpec) -> float:
    L, eps, m = spec.L, spec.eps, spec.m
    if t < L or t > L + eps:
        return 0.0
    return ((t - L) * (L + eps - t)) ** m


def _check_m(m):
    if int(m) != m or not 1 <= m <= M_MAX:
        raise DomainError(f"m must be an integer in [1, {M_MAX}], got {m!r}")


def log_mu(m: int) -> float:
    """log of (2m+1)! / (m! sqrt(2m+1)), from exact integer factorials."""
    _check_m(m)
    return (math.log(math.factorial(2 * m + 1)) - math.log(math.factorial(m))
            - 0.5 * math.log(2 * m + 1))


def log_nu(m: int) -> float:
    """log of (2m+1)! / (4^m (m!)^2)."""
    _check_m(m)
    return math.log(math.factorial(2 * m + 1)) - m * math.log(4) - 2 * math.log(math.factorial(m))


def mu(m: int) -> float:
    """Ratio ||f^(m)||_2 eps^(m+1/2) / ||f||_1."""
    return ld.to_linear(ld.from_log(log_mu(m)))


def nu(m: int) -> float:
    """Ratio ||f||_inf eps / ||f||_1."""
    _check_m(m)
    return math.factorial(2 * m + 1) / (4 ** m * math.factorial(m) ** 2)


def l1_norm(spec: WeightSpec) -> LogNonNegReal:
    """||f||_1 = eps^(2m+1) (m!)^2 / (2m+1)!  (a Beta integral)."""
    m = spec.m
    return ld.from_log((2 * m + 1) * math.log(spec.eps)
                       + 2 * math.log(math.factorial(m))
                       - math.log(math.factorial(2 * m + 1)))


def linf_norm(spec: WeightSpec) -> LogNonNegReal:
    return ld.from_log(2 * spec.m * math.log(spec.eps / 2))


def lm_norm(spec: WeightSpec) -> LogNonNegReal:
    """||f^(m)||_2 via the mu identity."""
    return ld.from_log(log_mu(spec.m) + l1_norm(spec).log_value
                       - (spec.m + 0.5) * math.log(spec.eps))


def laplace_numeric(s: complex, spec: WeightSpec) -> complex:
    """F(s) = int f(t) e^{-st} dt by quadrature (test support only).

    Uses t = L + eps*x so the integrand is x^m (1-x)^m e^{-s eps x} on [0, 1];
    the oscillating factor is handled by QUADPACK's cosine/sine weights.
    """
    s = complex(s)
    L, eps, m = spec.L, spec.eps, spec.m
    a = s.real * eps
    w = s.imag * eps

    def g(x):
        return (x * (1 - x)) ** m * math.exp(-a * x)

    opts = dict(epsabs=0, epsrel=1e-11, limit=400)
    # epsrel=1e-11 is below what cancellation allows at large |w|; QUADPACK
    # then warns but still lands within ~1e-14 of a 30-digit reference
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        if w == 0:
            re, im = quad(g, 0, 1, **opts)[0], 0.0
        else:
            re = quad(g, 0, 1, weight="cos", wvar=w, **opts)[0]
            im = -quad(g, 0, 1, weight="sin", wvar=w, **opts)[0]
    return cmath.exp(-s * L) * eps ** (2 * m + 1) * complex(re, im)


class LaplaceBounds(NamedTuple):
    lower: LogNonNegReal          # F(sigma) >= this, sigma = Re s
    trivial: LogNonNegReal        # |F(s)| <= e^{-sigma L} ||f||_1
    first_order: Optional[LogNonNegReal]   # None at s = 0
    mth_order: Optional[LogNonNegReal]     # None at s = 0


def laplace_bounds(s: complex, spec: WeightSpec) -> LaplaceBounds:
    s = complex(s)
    sigma = s.real
    if sigma < 0:
        raise DomainError(f"bounds need Re s >= 0, got {sigma!r}")
    L, eps, m = spec.L, spec.eps, spec.m
    n1 = l1_norm(spec).log_value
    lower = ld.from_log(-sigma * (L + eps) + n1)
    trivial = ld.from_log(-sigma * L + n1)
    if s == 0:
        return LaplaceBounds(lower, trivial, None, None)
    ls = math.log(abs(s))
    first = ld.from_log(-sigma * L - ls + math.log(2 * (2 * m + 1) / (eps * m)) + n1)
    mth = ld.from_log(0.5 * math.log(eps) - sigma * L + lm_norm(spec).log_value - m * ls)
    return LaplaceBounds(lower, trivial, first, mth)
