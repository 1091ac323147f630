import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from apinterval import errorterms as et
from apinterval import logdomain as ld
from apinterval import weights as wt

logs = st.floats(min_value=-700, max_value=700, allow_nan=False)


@given(logs, logs, logs)
def test_lsum_associative(a, b, c):
    x, y, z = ld.from_log(a), ld.from_log(b), ld.from_log(c)
    left = ld.lsum([ld.lsum([x, y]), z]).log_value
    right = ld.lsum([x, ld.lsum([y, z])]).log_value
    flat = ld.lsum([x, y, z]).log_value
    assert left == pytest.approx(right, rel=1e-12, abs=1e-12)
    assert left == pytest.approx(flat, rel=1e-12, abs=1e-12)


@given(st.lists(logs, min_size=1, max_size=8))
def test_lsum_commutative_and_bounded(xs):
    terms = [ld.from_log(t) for t in xs]
    a = ld.lsum(terms).log_value
    b = ld.lsum(reversed(terms)).log_value
    assert a == pytest.approx(b, rel=1e-12, abs=1e-12)
    assert max(xs) <= a <= max(xs) + math.log(len(xs)) + 1e-12


@given(logs, logs)
def test_mul_div_inverse(a, b):
    x, y = ld.from_log(a), ld.from_log(b)
    assert (x * y / y).log_value == pytest.approx(a, rel=1e-12, abs=1e-12)


weight = st.builds(wt.WeightSpec,
                   st.floats(0, 5), st.floats(0.1, 5), st.integers(1, 12))
points = st.tuples(st.floats(0, 2), st.floats(-60, 60))


@settings(max_examples=200, deadline=None)
@given(weight, points)
def test_laplace_bounds_that_hold(spec, pt):
    sigma, tau = pt
    s = complex(sigma, tau)
    assume(abs(s) > 1e-6)
    F = abs(wt.laplace_numeric(s, spec))
    b = wt.laplace_bounds(s, spec)
    slack = 1 + 1e-8
    assert F <= float(b.trivial) * slack
    assert F <= float(b.mth_order) * slack
    assert wt.laplace_numeric(sigma, spec).real >= float(b.lower) / slack
    # one integration by parts: |s F(s)| <= e^{-sigma L} 2 nu_m / eps ||f||_1
    ibp = math.exp(-sigma * spec.L) * 2 * wt.nu(spec.m) / spec.eps * float(wt.l1_norm(spec))
    assert abs(s) * F <= ibp * slack


@settings(max_examples=100, deadline=None)
@given(weight.filter(lambda w: w.m <= 5), points)
def test_first_order_bound_small_m(spec, pt):
    s = complex(*pt)
    assume(abs(s) > 1e-6)
    F = abs(wt.laplace_numeric(s, spec))
    assert F <= float(wt.laplace_bounds(s, spec).first_order) * (1 + 1e-8)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5e4, 1e10, 1e30, 1e60, 1e100]),
       st.sampled_from([1e-4, 1e-2, 1.0, 10.0]),
       st.integers(3, 120), st.floats(1.0, 1e6),
       st.floats(0.01, 0.98), st.floats(0.01, 0.98))
def test_r_total_decreasing(q, eps, m, H, f1, f2):
    assume(abs(f1 - f2) > 1e-6)
    top = et.condalf_ceiling(q, H)
    lo, hi = sorted((f1 * top, f2 * top))
    assert et.log_r(et.ErrorParams(hi, eps, H, m, q)) < et.log_r(et.ErrorParams(lo, eps, H, m, q))
