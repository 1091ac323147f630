"""Explicit intervals for primes in arithmetic progressions, and seven cubes."""
from .errors import DomainError, InfeasibleError, NoRootError, RangeError, ResourceError
from .logdomain import LogNonNegReal

__version__ = "0.1.0"

__all__ = ["DomainError", "InfeasibleError", "NoRootError", "RangeError",
           "ResourceError", "LogNonNegReal", "__version__"]
