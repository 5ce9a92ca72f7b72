# carlitz/special/routes/base.py
from abc import ABC, abstractmethod
from typing import Tuple

from core.algebra import RatFunc
from core.logging import get_logger

from ...compositions import d_weight, l_weight
from ...context import CarlitzContext
from ..types import Family, Method

logger = get_logger("carlitz_lab.carlitz.special.routes")


class SpecialNumberRoute(ABC):
    """Base class for the ways of computing BC_{N,n} / Pi(n) and CC_{N,n} / Pi(n)"""

    method: Method = None  # Set by subclasses

    @abstractmethod
    def normalized(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> RatFunc:
        """The number divided by Pi(n), for n >= 1"""
        pass

    def applies_to(self, ctx: CarlitzContext, family: Family, N: int, n: int) -> bool:
        return True

    def evaluate(
        self, ctx: CarlitzContext, family: Family, N: int, n: int
    ) -> Tuple[RatFunc, RatFunc]:
        """(value, normalized) with value = normalized * Pi(n)"""
        if n == 0:
            one = RatFunc.one(ctx.spec)
            return one, one
        normalized = self.normalized(ctx, family, N, n)
        if normalized.is_zero:
            return normalized, normalized
        return normalized * ctx.factorial_frac(n), normalized

    # Family ingredients shared by the composition-type routes

    @staticmethod
    def lead(ctx: CarlitzContext, family: Family, N: int) -> RatFunc:
        """-D_N for BC, -L_N for CC"""
        if family is Family.BC:
            return -ctx.d_frac(N)
        return -ctx.l_frac(N)

    @staticmethod
    def weight(ctx: CarlitzContext, family: Family, N: int, parts: Tuple[int, ...]) -> RatFunc:
        if family is Family.BC:
            return d_weight(ctx, N, parts)
        return l_weight(ctx, N, parts)
