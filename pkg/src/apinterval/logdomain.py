"""Nonnegative reals stored by their natural logarithm.

Quantities such as ``q**(-alpha*log q)`` at ``q = 1e100`` are around
``exp(-231000)`` and cannot live in a double; their logarithms can.
Zero is encoded as ``-inf`` so sums and comparisons need no special tag.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError, RangeError

_LOG_MAX = math.log(sys.float_info.max)
_LOG_MIN = math.log(sys.float_info.min)


@dataclass(frozen=True, order=True)
class LogNonNegReal:
    log_value: float

    def __post_init__(self):
        t = self.log_value
        if math.isnan(t) or t == math.inf:
            raise DomainError(f"log value must be finite or -inf, got {t!r}")

    @property
    def is_zero(self) -> bool:
        return self.log_value == -math.inf

    def __mul__(self, other: LogNonNegReal) -> LogNonNegReal:
        return mul(self, other)

    def __truediv__(self, other: LogNonNegReal) -> LogNonNegReal:
        return div(self, other)

    def __pow__(self, k: float) -> LogNonNegReal:
        return pow(self, k)

    def __add__(self, other: LogNonNegReal) -> LogNonNegReal:
        return lsum((self, other))

    def __float__(self) -> float:
        return to_linear(self)

    def __repr__(self):
        return f"LogNonNegReal(exp({self.log_value!r}))"


ZERO = LogNonNegReal(-math.inf)
ONE = LogNonNegReal(0.0)


def from_linear(x: float) -> LogNonNegReal:
    if x < 0 or math.isnan(x):
        raise DomainError(f"cannot represent negative value {x!r}")
    if x == 0:
        return ZERO
    return LogNonNegReal(math.log(x))


def from_log(t: float) -> LogNonNegReal:
    return LogNonNegReal(float(t))


def mul(a: LogNonNegReal, b: LogNonNegReal) -> LogNonNegReal:
    if a.is_zero or b.is_zero:
        return ZERO
    return LogNonNegReal(a.log_value + b.log_value)


def div(a: LogNonNegReal, b: LogNonNegReal) -> LogNonNegReal:
    if b.is_zero:
        raise DomainError("division by zero")
    if a.is_zero:
        return ZERO
    return LogNonNegReal(a.log_value - b.log_value)


def pow(a: LogNonNegReal, k: float) -> LogNonNegReal:  # noqa: A001
    if a.is_zero:
        if k > 0:
            return ZERO
        if k == 0:
            return ONE
        raise DomainError("zero raised to a negative power")
    return LogNonNegReal(a.log_value * k)


def lsum(terms: Iterable[LogNonNegReal]) -> LogNonNegReal:
    """Log-sum-exp pivoted on the largest term; empty input gives zero."""
    logs = [t.log_value for t in terms]
    if not logs:
        return ZERO
    top = max(logs)
    if top == -math.inf:
        return ZERO
    acc = math.fsum(math.exp(t - top) for t in logs)
    return LogNonNegReal(top + math.log(acc))


def to_linear(a: LogNonNegReal) -> float:
    t = a.log_value
    if t == -math.inf:
        return 0.0
    if t > _LOG_MAX:
        raise RangeError(t, f"overflow: exp({t!r}) exceeds float range")
    if t < _LOG_MIN:
        raise RangeError(t, f"underflow: exp({t!r}) below normal float range")
    return math.exp(t)
