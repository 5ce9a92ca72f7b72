# carlitz/special/routes/binomial.py
from core.algebra import RatFunc

from ...arith import binom_mod_p
from ...compositions import composition_sum, enumerate_power_compositions
from ...context import CarlitzContext
from ..types import Family, Method
from .base import SpecialNumberRoute


class BinomialRoute(SpecialNumberRoute):
    """sum_k C(n+1, k+1) lead^k sum over parts i_j >= 0 of the family weight"""

    method = Method.BINOMIAL

    def normalized(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> RatFunc:
        lead = self.lead(ctx, family, N)
        total = RatFunc.zero(ctx.spec)
        for k in range(1, n + 1):
            c = binom_mod_p(n + 1, k + 1, ctx.p)
            if not c:
                continue
            compositions = enumerate_power_compositions(ctx.r, N, n, k, min_part=0)
            if not compositions:
                continue
            inner = composition_sum(
                ctx.spec, compositions, lambda parts: self.weight(ctx, family, N, parts)
            )
            if not inner.is_zero:
                total = total + lead**k * inner * c
        return total
