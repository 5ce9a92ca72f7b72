# carlitz/special/calculator.py
from typing import Dict, List, Optional

from core.algebra import RatFunc
from core.logging import get_logger

from ..context import CarlitzContext
from .routes import (
    DEFAULT_QUOTIENT_MAX_N,
    BinomialRoute,
    CompositionRoute,
    QuotientRoute,
    SeriesRoute,
    SpecialNumberRoute,
    StirlingRoute,
)
from .types import Family, Method, SpecialNumberQuery, SpecialNumberResult

logger = get_logger("carlitz_lab.carlitz.special")


class SpecialNumberCalculator:
    """Dispatches queries to the computation routes and times them"""

    def __init__(self, quotient_max_n: int = DEFAULT_QUOTIENT_MAX_N):
        self.routes: Dict[Method, SpecialNumberRoute] = {}
        self._init_routes(quotient_max_n)

    def _init_routes(self, quotient_max_n: int):
        self.routes = {
            Method.SERIES: SeriesRoute(),
            Method.COMPOSITION: CompositionRoute(),
            Method.BINOMIAL: BinomialRoute(),
            Method.STIRLING: StirlingRoute(),
            Method.QUOTIENT: QuotientRoute(quotient_max_n),
        }

    def applicable_methods(
        self, ctx: CarlitzContext, family: Family, N: int, n: int
    ) -> List[Method]:
        return [m for m, route in self.routes.items() if route.applies_to(ctx, family, N, n)]

    def compute(self, query: SpecialNumberQuery) -> SpecialNumberResult:
        route = self.routes[query.method]
        with logger.workflow_context(
            "special_number",
            family=str(query.family),
            N=query.N,
            n=query.n,
            method=str(query.method),
        ) as context:
            value, normalized = route.evaluate(query.ctx, query.family, query.N, query.n)
            elapsed = context.elapsed
        logger.debug(f"{query.label} via {query.method}: zero={value.is_zero}")
        return SpecialNumberResult(
            query=query, value=value, normalized=normalized, elapsed=elapsed
        )

    def compute_all(
        self, ctx: CarlitzContext, family: Family, N: int, n: int
    ) -> List[SpecialNumberResult]:
        """One result per applicable route, in route order"""
        return [
            self.compute(SpecialNumberQuery(family, ctx, N, n, method))
            for method in self.applicable_methods(ctx, family, N, n)
        ]


_default_calculator: Optional[SpecialNumberCalculator] = None


def default_calculator() -> SpecialNumberCalculator:
    global _default_calculator
    if _default_calculator is None:
        _default_calculator = SpecialNumberCalculator()
    return _default_calculator


def compute(query: SpecialNumberQuery) -> SpecialNumberResult:
    return default_calculator().compute(query)


def _value(family: Family, method: Method, ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return compute(SpecialNumberQuery(family, ctx, N, n, method)).value


def bc_series(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    """BC_{N,n} from the generating function"""
    return _value(Family.BC, Method.SERIES, ctx, N, n)


def bc_composition(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.BC, Method.COMPOSITION, ctx, N, n)


def bc_binomial(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.BC, Method.BINOMIAL, ctx, N, n)


def bc_stirling(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.BC, Method.STIRLING, ctx, N, n)


def bc_quotient(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.BC, Method.QUOTIENT, ctx, N, n)


def cc_series(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    """CC_{N,n} from the generating function"""
    return _value(Family.CC, Method.SERIES, ctx, N, n)


def cc_composition(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.CC, Method.COMPOSITION, ctx, N, n)


def cc_binomial(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.CC, Method.BINOMIAL, ctx, N, n)


def cc_stirling(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.CC, Method.STIRLING, ctx, N, n)


def cc_quotient(ctx: CarlitzContext, N: int, n: int) -> RatFunc:
    return _value(Family.CC, Method.QUOTIENT, ctx, N, n)


def vanishes(r: int, N: int, n: int) -> bool:
    """Sufficient condition for BC_{N,n} = CC_{N,n} = 0.

    Either r^N (r-1) > n, or N >= 1 and r does not divide n. At N = 0 the
    numbers live on the multiples of r - 1, so r | n is not required there.
    """
    return n > 0 and ((N >= 1 and n % r != 0) or r**N * (r - 1) > n)


def support_step(r: int, N: int) -> int:
    """r^N (r-1); every n with a nonzero BC_{N,n} or CC_{N,n} is a multiple of it"""
    return r**N * (r - 1)
