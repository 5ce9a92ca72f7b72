from .base import SpecialNumberRoute
from .binomial import BinomialRoute
from .composition import CompositionRoute
from .quotient import DEFAULT_QUOTIENT_MAX_N, QuotientRoute
from .series import SeriesRoute
from .stirling import StirlingRoute

__all__ = [
    "BinomialRoute",
    "CompositionRoute",
    "DEFAULT_QUOTIENT_MAX_N",
    "QuotientRoute",
    "SeriesRoute",
    "SpecialNumberRoute",
    "StirlingRoute",
]
