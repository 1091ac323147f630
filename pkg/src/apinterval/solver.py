"""Computing alpha(q0, eps): seeds, the two balancing equations, and the (u, m) sweep.

For fixed (u, m):

1. seed H~(m) and alpha~(H~, m) from the closed-form approximations;
2. solve r2 = u r1 for H at alpha = alpha~ (bisection on log H);
3. solve 1 - q0 r = slack for alpha at that H (bisection on alpha).

``optimize`` keeps the smallest alpha over a log-spaced u grid and a
window of m around m~.
"""
from __future__ import annotations

import dataclasses
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from . import errorterms as et
from .errors import DomainError, InfeasibleError, NoRootError
from .estimates import CONSTANTS, AnalyticConstants

log = logging.getLogger(__name__)

Q0_MIN = 5e4
U_RANGE = (0.001, 0.2)
DEFAULT_SLACK = 1e-6
H_MAX = 1e9
RESIDUAL_TOL = 1e-9

TABLE_Q0 = (5e4,) + tuple(10.0 ** k for k in range(10, 101, 5))
TABLE_EPS = (1e-4, 1e-3, 1e-2, 0.1, 1.0, 10.0)


@dataclass(frozen=True)
class SolverInput:
    q0: float
    eps: float
    u: Optional[float] = None
    m: Optional[int] = None
    H: Optional[float] = None
    slack: float = DEFAULT_SLACK

    def __post_init__(self):
        if not self.q0 >= Q0_MIN:
            raise DomainError(f"q0 must be >= {Q0_MIN:g}, got {self.q0!r}")
        if not self.eps > 0:
            raise DomainError(f"eps must be positive, got {self.eps!r}")
        if self.u is not None and not U_RANGE[0] <= self.u <= U_RANGE[1]:
            raise DomainError(f"u must lie in {U_RANGE}, got {self.u!r}")
        if self.m is not None and (int(self.m) != self.m or self.m < 3):
            raise DomainError(f"m must be an integer >= 3, got {self.m!r}")
        if self.H is not None and not self.H >= 1:
            raise DomainError(f"H must be >= 1, got {self.H!r}")
        if not 0 < self.slack < 1:
            raise DomainError(f"slack must lie in (0, 1), got {self.slack!r}")


@dataclass(frozen=True)
class SolverSolution:
    alpha: float
    H: float
    m: int
    u: Optional[float]
    residual: float
    breakdown: et.ErrorBreakdown = field(repr=False)
    iterations: int
    q0: float = float("nan")
    eps: float = float("nan")

    def row(self):
        return {"q0": self.q0, "eps": self.eps, "u": self.u, "m": self.m,
                "H": self.H, "alpha": self.alpha}


def tilde_alpha(H: float, m: int, q0: float, eps: float, r_low: float = CONSTANTS.R1) -> float:
    """First-order alpha balancing q0 (1+u) r1~ = 1; independent of m."""
    if not H > 1:
        raise DomainError(f"alpha~ needs H > 1, got {H!r}")
    lq, lH = math.log(q0), math.log(H)
    return (r_low * (lq + lH) / lq ** 2
            * (lq + math.log(lH) + math.log(2 * lq + lH) - math.log(2 * math.pi * eps)))


def _scale_exponent(r_low, R):
    return 1 - r_low / R


def tilde_H(m: int, q0: float, eps: float, u: float,
            r_low: float = CONSTANTS.R1, R: float = CONSTANTS.R) -> float:
    if m < 2:
        raise DomainError(f"H~ needs m >= 2, got {m!r}")
    if not u > 0:
        raise DomainError(f"u must be positive, got {u!r}")
    lq = math.log(q0)
    inner = (math.log(4 / (u * math.sqrt(m))) + m * math.log(4 * m / math.e)
             + _scale_exponent(r_low, R) * math.log(q0 * lq / (4 * math.pi * eps)))
    return math.exp(inner / (m - 1)) / eps


def tilde_m(q0: float, eps: float, u: float,
            r_low: float = CONSTANTS.R1, R: float = CONSTANTS.R) -> float:
    if not u > 0:
        raise DomainError(f"u must be positive, got {u!r}")
    lq = math.log(q0)
    return 0.5 + math.log(16 / u) + _scale_exponent(r_low, R) * math.log(q0 * lq / (4 * math.pi * eps))


def _params(alpha, eps, H, m, q0, consts, variant):
    return et.ErrorParams(alpha=alpha, eps=eps, H=H, m=m, q=q0, consts=consts, variant=variant)


def solve_H(alpha_seed: float, u: float, m: int, q0: float, eps: float, *,
            consts: AnalyticConstants = CONSTANTS, variant: str = "two-region",
            tol: float = 1e-6) -> float:
    """Root in H of r2 = u r1 at fixed alpha, by bisection on log H.

    The seed alpha is only used to place H, so Condalf is not imposed here;
    ``solve_alpha`` enforces it on the final alpha.
    """
    lo, hi = 1e-9, math.log(H_MAX)

    def g(lh):
        p = et.ErrorParams(alpha=alpha_seed, eps=eps, H=math.exp(lh), m=m, q=q0,
                           consts=consts, variant=variant, enforce_condalf=False)
        return et.r2(p).log_value - math.log(u) - et.r1(p).log_value

    g_lo, g_hi = g(lo), g(hi)
    if not (g_lo > 0 > g_hi):
        raise NoRootError(
            f"r2 - u r1 has no sign change on H in [{math.exp(lo):.6g}, {H_MAX:g}] "
            f"(log-gap {g_lo:.4g} .. {g_hi:.4g})", g_lo, g_hi)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return math.exp(0.5 * (lo + hi))


def residual(alpha: float, H: float, m: int, q0: float, eps: float, *,
             consts: AnalyticConstants = CONSTANTS, variant: str = "two-region") -> float:
    """1 - q0 r(alpha, eps, H, m, q0)."""
    p = _params(alpha, eps, H, m, q0, consts, variant)
    return -math.expm1(math.log(q0) + et.log_r(p))


def solve_alpha(H: float, m: int, q0: float, eps: float, slack: float = DEFAULT_SLACK, *,
                consts: AnalyticConstants = CONSTANTS, variant: str = "two-region",
                max_iter: int = 200):
    """Smallest alpha with 1 - q0 r = slack, to RESIDUAL_TOL.

    Returns (alpha, iterations). The returned alpha sits on the safe side:
    its residual is in [slack, slack + RESIDUAL_TOL].
    """
    top = et.condalf_ceiling(q0, H, consts.R) * (1 - 1e-9)

    def f(a):
        return residual(a, H, m, q0, eps, consts=consts, variant=variant) - slack

    if f(top) < 0:
        raise InfeasibleError(
            f"q0 r > 1 - slack even at the Condalf ceiling alpha={top:.6g} "
            f"(H={H:.6g}, m={m})", stage="Cond2")
    lo, hi = 0.0, top
    it = 0
    while f(hi) > RESIDUAL_TOL and it < max_iter:
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
        it += 1
        if hi - lo <= 4 * math.ulp(hi):
            break
    return hi, it


def _solution(alpha, H, m, u, q0, eps, consts, variant, iterations):
    p = _params(alpha, eps, H, m, q0, consts, variant)
    bd = et.r_total(p)
    res = -math.expm1(math.log(q0) + bd.total.log_value)
    return SolverSolution(alpha=alpha, H=H, m=m, u=u, residual=res, breakdown=bd,
                          iterations=iterations, q0=q0, eps=eps)


def solve_fixed(q0: float, eps: float, m: int, H: float, slack: float = DEFAULT_SLACK, *,
                u: Optional[float] = None, consts: AnalyticConstants = CONSTANTS,
                variant: str = "two-region") -> SolverSolution:
    """Cond2 alone, with (m, H) given."""
    alpha, it = solve_alpha(H, m, q0, eps, slack, consts=consts, variant=variant)
    return _solution(alpha, H, m, u, q0, eps, consts, variant, it)


def _r_low(consts, variant):
    return consts.R1 if variant == "two-region" else consts.R


def solve_cell(q0: float, eps: float, u: float, m: int, slack: float = DEFAULT_SLACK, *,
               refine: int = 0, consts: AnalyticConstants = CONSTANTS,
               variant: str = "two-region") -> SolverSolution:
    """One (u, m) cell of the sweep."""
    r_low = _r_low(consts, variant)
    H0 = tilde_H(m, q0, eps, u, r_low, consts.R)
    alpha_seed = tilde_alpha(H0, m, q0, eps, r_low)
    H = solve_H(alpha_seed, u, m, q0, eps, consts=consts, variant=variant)
    alpha, it = solve_alpha(H, m, q0, eps, slack, consts=consts, variant=variant)
    for _ in range(refine):
        H = solve_H(alpha, u, m, q0, eps, consts=consts, variant=variant)
        alpha, extra = solve_alpha(H, m, q0, eps, slack, consts=consts, variant=variant)
        it += extra
    return _solution(alpha, H, m, u, q0, eps, consts, variant, it)


def default_u_grid(n: int = 40) -> np.ndarray:
    return np.geomspace(U_RANGE[0], U_RANGE[1], n)


def sweep_cells(q0, eps, u_grid=None, m_span=3, consts=CONSTANTS, variant="two-region"):
    u_grid = default_u_grid() if u_grid is None else u_grid
    r_low = _r_low(consts, variant)
    cells = []
    for u in u_grid:
        centre = math.ceil(tilde_m(q0, eps, float(u), r_low, consts.R))
        for m in range(max(3, centre - m_span), min(200, centre + m_span) + 1):
            cells.append((float(u), m))
    return cells


def _try_cell(args):
    q0, eps, u, m, slack, refine, consts, variant = args
    try:
        return solve_cell(q0, eps, u, m, slack, refine=refine, consts=consts, variant=variant)
    except (NoRootError, InfeasibleError, DomainError) as exc:
        log.debug("cell u=%g m=%d skipped: %s", u, m, exc)
        return None


def optimize(q0: float, eps: float, *, u_grid: Optional[Sequence[float]] = None,
             m_span: int = 3, slack: float = DEFAULT_SLACK, refine: int = 0,
             workers: int = 1, consts: AnalyticConstants = CONSTANTS,
             variant: str = "two-region") -> SolverSolution:
    SolverInput(q0, eps, slack=slack)
    cells = sweep_cells(q0, eps, u_grid, m_span, consts, variant)
    jobs = [(q0, eps, u, m, slack, refine, consts, variant) for u, m in cells]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_try_cell, jobs, chunksize=8))
    else:
        results = [_try_cell(j) for j in jobs]
    found = [r for r in results if r is not None]
    if not found:
        raise InfeasibleError(f"every (u, m) cell infeasible for q0={q0:g}, eps={eps:g}",
                              stage="sweep")
    return min(found, key=lambda s: (s.alpha, s.m, s.u))


def optimize_direct(q0: float, eps: float, m_values: Iterable[int], *,
                    slack: float = DEFAULT_SLACK, consts: AnalyticConstants = CONSTANTS,
                    variant: str = "two-region", log_H_max: float = 12.0) -> SolverSolution:
    """Minimise alpha over (m, H) directly, without the Cond1 balancing step."""
    best = None
    for m in m_values:
        def cost(lh, m=m):
            try:
                return solve_alpha(math.exp(lh), m, q0, eps, slack, consts=consts, variant=variant)[0]
            except InfeasibleError:
                return math.inf
        res = minimize_scalar(cost, bounds=(1e-3, log_H_max), method="bounded",
                              options={"xatol": 1e-5})
        if math.isfinite(res.fun) and (best is None or res.fun < best[0]):
            best = (res.fun, m, math.exp(res.x))
    if best is None:
        raise InfeasibleError("no feasible (m, H)", stage="direct")
    alpha, m, H = best
    a, it = solve_alpha(H, m, q0, eps, slack, consts=consts, variant=variant)
    return _solution(a, H, m, None, q0, eps, consts, variant, it)


def table_grid():
    return [(q0, eps) for q0 in TABLE_Q0 for eps in TABLE_EPS]


def reproduce_tables(grid=None, **kw):
    """Optimised (q0, eps, u, m, H, alpha) rows, in grid order."""
    grid = table_grid() if grid is None else grid
    rows = []
    for q0, eps in grid:
        sol = optimize(q0, eps, **kw)
        rows.append(sol.row())
    return rows


COMPARISON_MODES = {
    # name: (constants, r1 variant)
    "full": (CONSTANTS, "two-region"),
    "R6.50": (CONSTANTS, "classical"),
    "R9.65": (dataclasses.replace(CONSTANTS, R=9.65), "classical"),
    "R6.50-uniform": (CONSTANTS, "classical-uniform"),
    "R9.65-uniform": (dataclasses.replace(CONSTANTS, R=9.65), "classical-uniform"),
}


def mccurley_comparison(q0: float = 1e30, eps: float = math.log(3), mode: str = "full",
                        **kw) -> SolverSolution:
    """alpha under the constant sets of the comparison chain.

    ``full`` is the two-region pipeline. ``R6.50``/``R9.65`` use the
    classical region only (no four-zero split), each zero weighted by its
    own log(q|gamma|). The ``-uniform`` modes use log(qH) for every zero;
    the sweep seeds do not bracket their optimum, so they fall back to a
    direct (m, H) search.
    """
    if mode not in COMPARISON_MODES:
        raise DomainError(f"unknown mode {mode!r}; choose from {sorted(COMPARISON_MODES)}")
    consts, variant = COMPARISON_MODES[mode]
    if variant == "classical-uniform":
        return optimize_direct(q0, eps, range(60, 301, 10), consts=consts, variant=variant)
    return optimize(q0, eps, consts=consts, variant=variant, **kw)
