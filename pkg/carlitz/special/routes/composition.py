# carlitz/special/routes/composition.py
from core.algebra import RatFunc

from ...compositions import composition_sum, iterate_compositions
from ...context import CarlitzContext
from ..types import Family, Method
from .base import SpecialNumberRoute


class CompositionRoute(SpecialNumberRoute):
    """sum_k lead^k sum over S_k (parts i_j >= 1) of the family weight"""

    method = Method.COMPOSITION

    def normalized(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> RatFunc:
        lead = self.lead(ctx, family, N)
        total = RatFunc.zero(ctx.spec)
        for k, compositions in iterate_compositions(ctx.r, N, n, min_part=1):
            if not compositions:
                continue
            inner = composition_sum(
                ctx.spec, compositions, lambda parts: self.weight(ctx, family, N, parts)
            )
            if not inner.is_zero:
                total = total + lead**k * inner
        return total
