"""numpy implementations of the hot loops; same signatures as _ckernels."""
import numpy as np


def primes_upto(limit):
    """Primes <= limit as int64, odd-only Eratosthenes on a byte array."""
    limit = int(limit)
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    # index i stands for 2i+1
    size = (limit - 1) // 2 + 1
    flags = np.ones(size, dtype=np.uint8)
    flags[0] = 0
    i = 1
    while (2 * i + 1) ** 2 <= limit:
        if flags[i]:
            p = 2 * i + 1
            flags[p * p // 2::p] = 0
        i += 1
    odd = 2 * np.flatnonzero(flags).astype(np.int64) + 1
    return np.concatenate(([2], odd)).astype(np.int64)


def min_cubes_table(N, cap):
    """table[n] = least k <= cap with n a sum of k cubes (k >= 0), else cap+1."""
    N, cap = int(N), int(cap)
    cubes = np.arange(1, int(round(N ** (1 / 3))) + 2, dtype=np.int64) ** 3
    cubes = cubes[cubes <= N]
    out = np.full(N + 1, cap + 1, dtype=np.uint8)
    reach = np.zeros(N + 1, dtype=bool)
    reach[0] = True
    out[0] = 0
    for k in range(1, cap + 1):
        nxt = reach.copy()
        for c in cubes:
            nxt[c:] |= reach[:N + 1 - c]
        out[nxt & ~reach] = k
        reach = nxt
    return out


def theta_scan(primes, q, phi_q, xmax):
    """Per residue class a mod q: sup over breakpoints y <= xmax of
    |theta(y;q,a) - y/phi(q)| / sqrt(y), the y attaining it,
    |theta(xmax;q,a) - xmax/phi(q)|, and sup over y <= xmax of
    |theta(y;q,a) - y/phi(q)|.

    Breakpoints are y = p and y -> p^- for primes p = a mod q; between them
    theta - y/phi is linear, so these points carry every extreme.
    """
    q = int(q)
    ps = primes[primes <= xmax]
    ratio = np.zeros(q)
    where = np.zeros(q)
    end = np.zeros(q)
    peak = np.zeros(q)
    res = ps % q
    for a in range(q):
        sel = ps[res == a]
        if len(sel) == 0:
            end[a] = peak[a] = xmax / phi_q
            continue
        lg = np.log(sel.astype(np.float64))
        th = np.cumsum(lg)
        lin = sel / phi_q
        root = np.sqrt(sel.astype(np.float64))
        after = np.abs(th - lin) / root
        before = np.abs(th - lg - lin) / root
        r = np.maximum(after, before)
        j = int(np.argmax(r))
        ratio[a] = r[j]
        where[a] = sel[j]
        end[a] = abs(th[-1] - xmax / phi_q)
        peak[a] = max(np.max(np.abs(th - lin)), np.max(np.abs(th - lg - lin)), end[a])
    return ratio, where, end, peak
