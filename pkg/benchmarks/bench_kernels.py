"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--sieve 10000000]
"""
import argparse
import json
import math
import timeit

from apinterval import kernels


def cases(args):
    py, c = kernels.py, kernels.c
    primes = py.primes_upto(args.theta_x)
    yield "primes_upto", lambda k: k.primes_upto(args.sieve)
    yield "min_cubes_table", lambda k: k.min_cubes_table(args.cubes, 9)
    for q in (12, 71):
        phi = float(sum(1 for a in range(1, q + 1) if math.gcd(a, q) == 1))
        yield f"theta_scan(q={q})", lambda k, q=q, phi=phi: k.theta_scan(primes, q, phi, float(args.theta_x))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sieve", type=int, default=10 ** 7)
    ap.add_argument("--cubes", type=int, default=10 ** 6)
    ap.add_argument("--theta-x", type=int, default=10 ** 7)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args(argv)

    impls = {"numpy": kernels.py}
    if kernels.c is not None:
        impls["cython"] = kernels.c
    rows = []
    for name, fn in cases(args):
        row = {"kernel": name}
        for label, mod in impls.items():
            row[label] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        if "cython" in row:
            row["speedup"] = row["numpy"] / row["cython"]
        rows.append(row)

    if args.json:
        print(json.dumps({"backend": kernels.BACKEND, "rows": rows}, indent=2))
        return
    print(f"active backend: {kernels.BACKEND}")
    print(f"{'kernel':<22}{'numpy s':>10}{'cython s':>10}{'speedup':>9}")
    for r in rows:
        cy = f"{r['cython']:.4f}" if "cython" in r else "n/a"
        sp = f"{r['speedup']:.2f}x" if "speedup" in r else ""
        print(f"{r['kernel']:<22}{r['numpy']:>10.4f}{cy:>10}{sp:>9}")


if __name__ == "__main__":
    main()
