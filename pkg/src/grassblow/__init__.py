"""grassblow: exact combinatorics, divisor lattices and KE tests for canonical
blow-ups T(s,p,n) of Grassmannians and their source divisors M(s,p,n).

Everything in the core is exact (Fraction / Python int).  No floats.
"""

__version__ = "0.1.0"

from .errors import ParamError, DomainError, CrossCheckError  # noqa: F401
