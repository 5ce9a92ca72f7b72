# carlitz/special/routes/series.py
from core.algebra import RatFunc

from ...context import CarlitzContext
from ...series import tail_quotient
from ..types import Family, Method
from .base import SpecialNumberRoute, logger


class SeriesRoute(SpecialNumberRoute):
    """Coefficient of x^n in 1/h, h the normalized tail of e_C or log_C.

    This is the defining generating function, so it serves as the reference
    the other routes are checked against.
    """

    method = Method.SERIES

    def normalized(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> RatFunc:
        h = tail_quotient(family.series_kind, ctx, N, n)
        logger.debug(f"Inverting tail quotient with {len(h)} terms", order=n)
        return h.inverse().coefficient(n)
