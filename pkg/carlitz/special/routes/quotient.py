# carlitz/special/routes/quotient.py
from core.algebra import RatFunc
from core.exceptions import RouteNotApplicableError

from ...context import CarlitzContext
from ...series import ht_quotient_rule_at_zero, tail_quotient
from ..types import Family, Method
from .base import SpecialNumberRoute

# The ordered enumeration grows exponentially in n
DEFAULT_QUOTIENT_MAX_N = 24


class QuotientRoute(SpecialNumberRoute):
    """H^(n)(1/h) at x = 0 by the first quotient rule over ordered compositions"""

    method = Method.QUOTIENT

    def __init__(self, max_n: int = DEFAULT_QUOTIENT_MAX_N):
        self.max_n = max_n

    def applies_to(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> bool:
        return n <= self.max_n

    def normalized(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> RatFunc:
        if not self.applies_to(ctx, family, N, n):
            raise RouteNotApplicableError(
                f"the quotient route is limited to n <= {self.max_n}, got n = {n}"
            )
        h = tail_quotient(family.series_kind, ctx, N, n)
        return ht_quotient_rule_at_zero(h, n, variant=1)
