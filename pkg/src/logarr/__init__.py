"""Exact invariants of central hyperplane arrangements.

Computes intersection lattices, characteristic and Tutte polynomials,
logarithmic derivation modules, the logarithmic ideal, bigraded Groebner
bases and Hilbert series, and the Chow-class identities tying them
together.  All arithmetic is exact (arbitrary-precision rationals).
"""

from .arrangement import Arrangement, IntersectionLattice
from .poly import MPoly

__all__ = ["Arrangement", "IntersectionLattice", "MPoly"]
__version__ = "0.1.0"
