import math

import numpy as np
import pytest
import sympy

from apinterval import sievelab as sl
from apinterval.errors import DomainError, ResourceError
from apinterval.weights import WeightSpec, f_eval


@pytest.fixture(scope="module")
def small():
    return sl.sieve(10 ** 5)


def test_sieve_counts(golden, sieve7):
    assert sieve7.pi(10 ** 6) == golden["pi"]["1000000"]
    assert sieve7.pi(10 ** 7) == golden["pi"]["10000000"]
    assert len(sl.sieve(1).primes) == 0
    assert list(sl.sieve(2).primes) == [2]
    assert list(sl.sieve(30).primes) == list(sympy.primerange(2, 31))


def test_sieve_guard():
    with pytest.raises(ResourceError):
        sl.sieve(10 ** 9 + 1)
    with pytest.raises(ResourceError):
        sl.sieve(100, guard=50)


def test_totient():
    assert [sl.totient(q) for q in range(1, 13)] == [int(sympy.totient(q)) for q in range(1, 13)]
    s = sl.sieve(1000)
    phi = sl.totients_upto(1000, s)
    assert all(phi[q] == sympy.totient(q) for q in range(1, 1001))


def test_theta(golden, small):
    assert sl.theta(10, 3, 1, small) == pytest.approx(golden["theta_10_3_1"], rel=1e-15)
    assert sl.theta(10, 3, 2, small) == pytest.approx(golden["theta_10_3_2"], rel=1e-15)
    assert sl.theta(1.5, 5, 1, small) == 0.0
    with pytest.raises(DomainError):
        sl.theta(100, 6, 3, small)
    with pytest.raises(ResourceError):
        sl.theta(2e5, 3, 1, small)


def test_theta_total_matches_chebyshev(small):
    y = 10 ** 5
    total = sum(sl.theta(y, 4, a, small) for a in (1, 3)) + math.log(2)
    want = math.fsum(math.log(p) for p in sympy.primerange(2, y + 1))
    assert total == pytest.approx(want, rel=1e-13)


def test_least_prime(golden, sieve7):
    for key, p in golden["least_prime"].items():
        q, a = map(int, key.split(","))
        assert sl.least_prime_in_ap(q, a, sieve7) == p
    assert sl.least_prime_in_ap(10 ** 6 + 3, 1, sl.sieve(100)) is None
    with pytest.raises(DomainError):
        sl.least_prime_in_ap(10, 5, sieve7)


def test_theta_scan_small_against_direct(small):
    rep = sl.theta_deviation_scan(6, 2000, small)
    best = 0.0
    for q in range(1, 7):
        phi = sl.totient(q)
        for a in range(q):
            if math.gcd(a, q) != 1:
                continue
            th = 0.0
            for p in sympy.primerange(2, 2001):
                if p % q == a % q:
                    # just before and at p
                    best = max(best, abs(th - p / phi) / math.sqrt(p))
                    th += math.log(p)
                    best = max(best, abs(th - p / phi) / math.sqrt(p))
    assert rep.max_deviation == pytest.approx(best, rel=1e-12)
    assert rep.passed == (best <= 2.072)


def test_theta_scan_full_range(sieve7):
    rep = sl.theta_deviation_scan(72, 1e7, sieve7)
    assert rep.passed
    assert rep.max_deviation == pytest.approx(2.07119, abs=1e-5)
    assert rep.witness == {"q": 2, "a": 1, "y": 1423.0}
    assert set(rep.details["per_q"]) == set(range(1, 73))
    d = rep.as_dict()
    assert d["pass"] is True and d["bound"] == 2.072


def test_auxiliary_checks(sieve7):
    reps = sl.auxiliary_constant_checks(sieve7)
    assert [r.name for r in reps] == ["prime-series-2.10", "log-p-over-p-minus-1", "phi-ratio"]
    assert all(r.passed for r in reps)
    assert reps[0].max_deviation == pytest.approx(2.0977, abs=1e-3)
    assert reps[2].witness["q"] == 30030
    with pytest.raises(DomainError):
        sl.auxiliary_constant_checks(sl.sieve(1000))


def test_weighted_prime_sum(small):
    spec = WeightSpec(math.log(100), 2.0, 3)
    got = sl.weighted_prime_sum(4, 1, spec, small)
    want = math.fsum(math.log(p) / p * f_eval(math.log(p), spec)
                     for p in sympy.primerange(100, 740) if p % 4 == 1)
    assert got == pytest.approx(want, rel=1e-13)
    with pytest.raises(ResourceError):
        sl.weighted_prime_sum(4, 1, WeightSpec(10.0, 2.0, 3), small)
