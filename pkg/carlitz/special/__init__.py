from .calculator import (
    SpecialNumberCalculator,
    bc_binomial,
    bc_composition,
    bc_quotient,
    bc_series,
    bc_stirling,
    cc_binomial,
    cc_composition,
    cc_quotient,
    cc_series,
    cc_stirling,
    compute,
    default_calculator,
    support_step,
    vanishes,
)
from .types import Family, Method, SpecialNumberQuery, SpecialNumberResult

__all__ = [
    "Family",
    "Method",
    "SpecialNumberCalculator",
    "SpecialNumberQuery",
    "SpecialNumberResult",
    "bc_binomial",
    "bc_composition",
    "bc_quotient",
    "bc_series",
    "bc_stirling",
    "cc_binomial",
    "cc_composition",
    "cc_quotient",
    "cc_series",
    "cc_stirling",
    "compute",
    "default_calculator",
    "support_step",
    "vanishes",
]
