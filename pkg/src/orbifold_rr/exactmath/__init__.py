"""Exact rational, polynomial, series and cyclotomic arithmetic."""

from fractions import Fraction as Rat

from .cyclotomic import (
    CycloElem,
    NotRationalError,
    cyclo_inv,
    cyclotomic_poly,
    rational_part,
)
from .poly import ONE, T, ZERO, Poly, format_poly, poly_divmod, poly_mul, poly_xgcd
from .ratfunc import RationalFunction, cyclotomic_exponents, series_of
from .series import TruncSeries

__all__ = [
    "CycloElem",
    "NotRationalError",
    "ONE",
    "Poly",
    "Rat",
    "RationalFunction",
    "T",
    "TruncSeries",
    "ZERO",
    "cyclo_inv",
    "cyclotomic_exponents",
    "cyclotomic_poly",
    "format_poly",
    "poly_divmod",
    "poly_mul",
    "poly_xgcd",
    "rational_part",
    "series_of",
]
