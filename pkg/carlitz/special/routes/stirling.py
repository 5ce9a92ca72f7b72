# carlitz/special/routes/stirling.py
from core.algebra import RatFunc

from ...arith import binom_mod_p
from ...compositions import composition_target
from ...context import CarlitzContext
from ...stirling import Flavor, stirling1_c, stirling2_c
from ..types import Family, Method
from .base import SpecialNumberRoute


class StirlingRoute(SpecialNumberRoute):
    """sum_k C(n+1, k+1) lead^k Pi(k)/Pi(n + k r^N) times an associated Stirling-Carlitz number.

    BC uses {n + k r^N, k}_(C, >= N); CC uses (-1)^(N k) [n + k r^N, k]_(C, >= N).
    The Stirling-Carlitz numbers are the full values, so the factorial ratio
    is applied here and cancels in the reduced sum.
    """

    method = Method.STIRLING

    def normalized(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> RatFunc:
        stirling = stirling2_c if family is Family.BC else stirling1_c
        flavor = Flavor.associated(N)
        lead = self.lead(ctx, family, N)
        total = RatFunc.zero(ctx.spec)
        for k in range(1, n + 1):
            c = binom_mod_p(n + 1, k + 1, ctx.p)
            if not c:
                continue
            target = composition_target(ctx.r, N, n, k)
            number = stirling(ctx, target, k, flavor)
            if number.is_zero:
                continue
            term = number * RatFunc(ctx.carlitz_factorial(k), ctx.carlitz_factorial(target))
            if family is Family.CC:
                term = term * ctx.sign(N * k)
            total = total + lead**k * term * c
        return total
