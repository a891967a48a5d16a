"""Euler-product exponents and zeta-regularized invariants of Hilbert series."""

from .combinat import necklace_poly, phi_poly, witt_dim
from .eulerprod import ExponentVector, exponents, product_expand
from .hilbert import HilbertSeries, expand, parse_descriptor, pure_spinor, verlinde, veronese
from .regularize import moment_even, moment_one, regularized_invariants, z_zero
from .series import IntPoly, LaurentPoly, TruncSeries

__version__ = "0.1.0"

__all__ = [
    "ExponentVector",
    "HilbertSeries",
    "IntPoly",
    "LaurentPoly",
    "TruncSeries",
    "expand",
    "exponents",
    "moment_even",
    "moment_one",
    "necklace_poly",
    "parse_descriptor",
    "phi_poly",
    "product_expand",
    "pure_spinor",
    "regularized_invariants",
    "verlinde",
    "veronese",
    "witt_dim",
    "z_zero",
]
