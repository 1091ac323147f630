"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is valid."""


class RangeError(OverflowError):
    """A log-domain value cannot be represented as a native float."""

    def __init__(self, log_value, message=None):
        self.log_value = log_value
        super().__init__(message or f"value exp({log_value!r}) outside float range")


class NoRootError(RuntimeError):
    """A bracketing root search found no sign change."""

    def __init__(self, message, lo=None, hi=None):
        self.lo = lo
        self.hi = hi
        super().__init__(message)


class InfeasibleError(RuntimeError):
    """No parameter choice satisfies the required conditions."""

    def __init__(self, message, stage=None):
        self.stage = stage
        super().__init__(message)


class ResourceError(RuntimeError):
    """A request exceeds a configured memory or range guard."""
