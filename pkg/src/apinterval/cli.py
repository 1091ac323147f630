"""Command line: alpha, table, seven-cubes, verify.

Payload goes to stdout (or --out); progress to stderr. Exit status is 0 on
success, 1 when a solve is infeasible or a verification fails, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import csv
import datetime
import io
import json
import logging
import math
import sys

from . import __version__, kernels
from .errors import DomainError, InfeasibleError, NoRootError, ResourceError

CSV_COLUMNS = ("q0", "eps", "u", "m", "H", "alpha")
GRID_PRESETS = ("published", "paper")

log = logging.getLogger("apinterval")


class UsageError(Exception):
    pass


def _floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser():
    ap = argparse.ArgumentParser(prog="apinterval", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--out", help="write the payload here instead of stdout")
        p.add_argument("--full-precision", action="store_true",
                       help="print floats with full precision (default 6 significant digits)")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("alpha", help="solve for alpha at one (q0, eps)")
    p.add_argument("--q0", type=float, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--u", type=float, help="fix u instead of sweeping")
    p.add_argument("--m", type=int, help="fix m instead of sweeping")
    p.add_argument("--H", type=float, help="fix H (with --m) and solve only for alpha")
    p.add_argument("--slack", type=float, default=1e-6)
    p.add_argument("--refine", type=int, default=0, help="extra H/alpha passes per cell")
    p.add_argument("--grid", type=int, default=40, help="number of u grid points")
    common(p)

    p = sub.add_parser("table", help="alpha over a (q0, eps) grid")
    p.add_argument("--grid", default="published",
                   help='"published": the 20 x 6 (q0, eps) grid of the reference tables')
    p.add_argument("--q0", type=_floats, help="comma-separated q0 values (overrides --grid)")
    p.add_argument("--eps", type=_floats, help="comma-separated eps values (overrides --grid)")
    p.add_argument("--slack", type=float, default=1e-6)
    common(p)

    p = sub.add_parser("seven-cubes", help="thresholds on log n and small-n checks")
    p.add_argument("--thresholds", action="store_true")
    p.add_argument("--n", type=int, help="least number of cubes for this n (n <= 1e8)")
    p.add_argument("--nmax", type=float, help="check every n in [455, nmax] needs <= 7 cubes")
    common(p)

    p = sub.add_parser("verify", help="prime-sum verifications")
    p.add_argument("suite", choices=("theta", "aux", "least-prime", "all"))
    p.add_argument("--qmax", type=int, default=72)
    p.add_argument("--xmax", type=float, default=1e7)
    common(p)
    return ap


def _round(obj, full):
    if full:
        return obj
    if isinstance(obj, float):
        return obj if not math.isfinite(obj) else float(f"{obj:.6g}")
    if isinstance(obj, dict):
        return {k: _round(v, full) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v, full) for v in obj]
    return obj


def _solution_payload(sol):
    bd = {name: getattr(sol.breakdown, name).log_value
          for name in ("r1", "r2", "r3", "r4", "r5", "total")}
    return {"q0": sol.q0, "eps": sol.eps, "u": sol.u, "m": sol.m, "H": sol.H,
            "alpha": sol.alpha, "residual": sol.residual, "iterations": sol.iterations,
            "log_r": bd}


def cmd_alpha(args):
    from . import solver
    if args.H is not None and args.m is None:
        raise UsageError("--H needs --m")
    solver.SolverInput(args.q0, args.eps, u=args.u, m=args.m, H=args.H, slack=args.slack)
    if args.m is not None and args.H is not None:
        sol = solver.solve_fixed(args.q0, args.eps, args.m, args.H, args.slack, u=args.u)
    elif args.m is not None and args.u is not None:
        sol = solver.solve_cell(args.q0, args.eps, args.u, args.m, args.slack, refine=args.refine)
    elif args.m is not None:
        raise UsageError("--m needs --u or --H")
    else:
        grid = [args.u] if args.u is not None else solver.default_u_grid(args.grid)
        sol = solver.optimize(args.q0, args.eps, u_grid=grid, slack=args.slack,
                              refine=args.refine, workers=args.workers)
    return _solution_payload(sol), True


def cmd_table(args):
    from . import solver
    if args.q0 or args.eps:
        qs = args.q0 or list(solver.TABLE_Q0)
        es = args.eps or list(solver.TABLE_EPS)
        grid = [(q, e) for q in qs for e in es]
    elif args.grid in GRID_PRESETS:
        grid = solver.table_grid()
    else:
        raise UsageError(f"unknown grid preset {args.grid!r}")
    rows = []
    for q0, eps in grid:
        log.info("q0=%g eps=%g", q0, eps)
        sol = solver.optimize(q0, eps, slack=args.slack, workers=args.workers)
        rows.append(sol.row())
    return rows, True


def cmd_seven_cubes(args):
    from . import sevencubes as sc
    out, ok = {}, True
    if not (args.thresholds or args.n is not None or args.nmax is not None):
        args.thresholds = True
    if args.thresholds:
        th = sc.n0_threshold()
        out["thresholds"] = {
            "clustering": th.clustering, "inequality": th.inequality, "kappa": th.kappa,
            "modulus_c1": th.modulus_c1, "modulus_c2": th.modulus_c2,
            "combined": th.combined_c2, "combined_c1_reading": th.combined_c1,
            "headline": th.headline, "margins": th.margins,
        }
        ok &= th.combined_c2 <= th.headline
    if args.n is not None:
        k = sc.brute_force_min_cubes(args.n, 9)
        out["min_cubes"] = {"n": args.n, "k": k}
    if args.nmax is not None:
        N = int(args.nmax)
        if N > sc.TABLE_MAX * 50:
            raise ResourceError(f"--nmax {N} too large for the table scan")
        table = sc.min_cubes_table(N, 9)
        bad = [int(x) + 455 for x in (table[455:] > 7).nonzero()[0][:10]]
        out["range_check"] = {"from": 455, "to": N, "max_cubes": int(table[455:].max()),
                              "exceptions": bad, "min_cubes_23": int(table[23]) if N >= 23 else None,
                              "min_cubes_239": int(table[239]) if N >= 239 else None}
        ok &= not bad
    return out, ok


def cmd_verify(args):
    from . import sievelab as sl
    limit = int(max(args.xmax, 1e6)) if args.suite in ("aux", "all") else int(args.xmax)
    s = sl.sieve(limit)
    reports = []
    if args.suite in ("theta", "all"):
        reports.append(sl.theta_deviation_scan(args.qmax, args.xmax, s,
                                               progress=lambda m: print(m, file=sys.stderr)))
    if args.suite in ("aux", "all"):
        reports.extend(sl.auxiliary_constant_checks(s))
    if args.suite in ("least-prime", "all"):
        worst = (0, None)
        for q in range(1, args.qmax + 1):
            for a in range(q):
                if math.gcd(a, q) == 1:
                    p = sl.least_prime_in_ap(q, a, s)
                    if p is None:
                        worst = (math.inf, (q, a))
                    elif p > worst[0]:
                        worst = (p, (q, a))
        reports.append(sl.VerificationReport(
            name="least-prime", params={"q_max": args.qmax, "x_max": args.xmax},
            max_deviation=float(worst[0]), bound=float(args.xmax),
            witness={"q": worst[1][0], "a": worst[1][1]}, passed=worst[0] <= args.xmax))
    payload = [r.as_dict() for r in reports]
    return payload, all(r.passed for r in reports)


COMMANDS = {"alpha": cmd_alpha, "table": cmd_table, "seven-cubes": cmd_seven_cubes,
            "verify": cmd_verify}


def _text(payload):
    if isinstance(payload, list):
        return "\n".join(_text(r) for r in payload)
    if isinstance(payload, dict):
        return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}"
                         for k, v in payload.items())
    return str(payload)


def _csv(payload):
    rows = payload if isinstance(payload, list) else [payload]
    buf = io.StringIO()
    if rows and all(set(CSV_COLUMNS) <= set(r) for r in rows):
        wr = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, extrasaction="ignore",
                            lineterminator="\n")
    else:
        keys = list(dict.fromkeys(k for r in rows for k in r))
        wr = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        rows = [{k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()}
                for r in rows]
    wr.writeheader()
    wr.writerows(rows)
    return buf.getvalue()


def render(command, payload, fmt, full):
    payload = _round(payload, full)
    if fmt == "csv":
        return _csv(payload)
    if fmt == "text":
        return _text(payload) + "\n"
    doc = {"command": command, "result": payload,
           "meta": {"version": __version__, "backend": kernels.BACKEND,
                    "generated": datetime.datetime.now(datetime.timezone.utc).isoformat()}}
    return json.dumps(doc, indent=2) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(message)s")
    if args.workers < 1:
        print("error: --workers must be >= 1", file=sys.stderr)
        return 2
    try:
        payload, ok = COMMANDS[args.command](args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InfeasibleError, NoRootError, ResourceError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        payload, ok = {"error": str(exc)}, False
    text = render(args.command, payload, args.format, args.full_precision)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def main():
    sys.exit(run())
