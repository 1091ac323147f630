"""Hot loops, compiled when the extension built and numpy otherwise.

``BACKEND`` names the implementation picked at import; both modules stay
importable so they can be compared.
"""
from . import _pykernels as py

try:
    from . import _ckernels as c
except ImportError:  # extension not built
    c = None

impl = c if c is not None else py
BACKEND = "cython" if c is not None else "numpy"

primes_upto = impl.primes_upto
min_cubes_table = impl.min_cubes_table
theta_scan = impl.theta_scan
