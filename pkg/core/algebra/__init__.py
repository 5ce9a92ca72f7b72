from .field import FieldElem, FieldSpec, ff_arith
from .poly import Poly, poly_arith, poly_gcd
from .ratfunc import RatFunc, rf_arith
from .text import format_poly, format_ratfunc, parse_poly, parse_ratfunc

__all__ = [
    "FieldElem",
    "FieldSpec",
    "Poly",
    "RatFunc",
    "ff_arith",
    "format_poly",
    "format_ratfunc",
    "parse_poly",
    "parse_ratfunc",
    "poly_arith",
    "poly_gcd",
    "rf_arith",
]
