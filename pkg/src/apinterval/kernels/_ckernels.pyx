# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in _pykernels."""
import numpy as np
cimport numpy as cnp
from libc.math cimport log, sqrt, fabs

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cnp.import_array()


def primes_upto(limit):
    cdef long long n = limit
    if n < 2:
        return np.zeros(0, dtype=np.int64)
    cdef long long size = (n - 1) // 2 + 1
    cdef cnp.uint8_t[::1] flags = np.ones(size, dtype=np.uint8)
    cdef long long i, j, p, count = 1
    flags[0] = 0
    i = 1
    while (2 * i + 1) * (2 * i + 1) <= n:
        if flags[i]:
            p = 2 * i + 1
            j = p * p // 2
            while j < size:
                flags[j] = 0
                j += p
        i += 1
    for i in range(size):
        count += flags[i]
    out = np.empty(count, dtype=np.int64)
    cdef cnp.int64_t[::1] o = out
    o[0] = 2
    j = 1
    for i in range(size):
        if flags[i]:
            o[j] = 2 * i + 1
            j += 1
    return out


def min_cubes_table(N, cap):
    """Layered reachability, as in the numpy version, on 64-bit bitsets:
    bit i of layer k is set when i is a sum of at most k cubes."""
    cdef long long lim = N, i, j, c, ncubes = 0
    cdef Py_ssize_t nw = lim // 64 + 1, w, q
    cdef int k, kcap = cap, r
    cdef cnp.uint64_t word, fresh
    while (ncubes + 1) * (ncubes + 1) * (ncubes + 1) <= lim:
        ncubes += 1
    out = np.full(lim + 1, kcap + 1, dtype=np.uint8)
    cdef cnp.uint8_t[::1] t = out
    cdef cnp.uint64_t[::1] reach = np.zeros(nw, dtype=np.uint64)
    cdef cnp.uint64_t[::1] nxt = np.zeros(nw, dtype=np.uint64)
    reach[0] = 1
    t[0] = 0
    for k in range(1, kcap + 1):
        nxt[:] = reach
        for j in range(1, ncubes + 1):
            c = j * j * j
            q = c >> 6
            r = c & 63
            if r == 0:
                for w in range(q, nw):
                    nxt[w] |= reach[w - q]
            else:
                nxt[q] |= reach[0] << r
                for w in range(q + 1, nw):
                    nxt[w] |= (reach[w - q] << r) | (reach[w - q - 1] >> (64 - r))
        for w in range(nw):
            fresh = nxt[w] & ~reach[w]
            while fresh:
                i = w * 64 + __builtin_ctzll(fresh)
                if i <= lim:
                    t[i] = k
                fresh &= fresh - 1
        reach[:] = nxt
    return out


def theta_scan(cnp.int64_t[::1] primes, long long q, double phi_q, double xmax):
    ratio = np.zeros(q)
    where = np.zeros(q)
    end = np.zeros(q)
    peak = np.zeros(q)
    th_arr = np.zeros(q)
    cdef double[::1] r = ratio, w = where, e = end, pk = peak, th = th_arr
    cdef Py_ssize_t i
    cdef long long p, a
    cdef double lg, lin, root, d1, d2
    for i in range(primes.shape[0]):
        p = primes[i]
        if p > xmax:
            break
        a = p % q
        lg = log(<double>p)
        lin = p / phi_q
        root = sqrt(<double>p)
        d2 = fabs(th[a] - lin)
        th[a] += lg
        d1 = fabs(th[a] - lin)
        if d1 > pk[a]:
            pk[a] = d1
        if d2 > pk[a]:
            pk[a] = d2
        d1 /= root
        d2 /= root
        if d2 > d1:
            d1 = d2
        if d1 > r[a]:
            r[a] = d1
            w[a] = p
    for a in range(q):
        e[a] = fabs(th[a] - xmax / phi_q)
        if e[a] > pk[a]:
            pk[a] = e[a]
    return ratio, where, end, peak
