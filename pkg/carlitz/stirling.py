# carlitz/stirling.py
"""Stirling-Carlitz numbers, complete and incomplete.

{n, k}_C is Pi(n)/Pi(k) times the coefficient of z^n in (base)^k, where the
base is e_C for the complete flavor, e_C - E_(m-1) for associated(m) and
E_m for restricted(m). The first kind uses log_C and F_m the same way.
"""

import threading
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional

from core.algebra import RatFunc
from core.logging import get_logger

from .arith import checked_pow
from .compositions import composition_sum, d_weight, enumerate_power_compositions, l_weight
from .context import CarlitzContext
from .series import SeriesKind, SparseSeries, carlitz_series

logger = get_logger("carlitz_lab.carlitz.stirling")


class StirlingKind(Enum):
    FIRST = "first"
    SECOND = "second"

    def __str__(self):
        return self.value

    @property
    def series_kind(self) -> SeriesKind:
        return SeriesKind.LOG if self is StirlingKind.FIRST else SeriesKind.EXP


class FlavorType(Enum):
    COMPLETE = "complete"
    ASSOCIATED = "associated"
    RESTRICTED = "restricted"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Flavor:
    """Complete, associated (terms i >= m) or restricted (terms i <= m)"""

    name: FlavorType = FlavorType.COMPLETE
    m: Optional[int] = None

    def __post_init__(self):
        if self.name is FlavorType.COMPLETE:
            if self.m is not None:
                raise ValueError("the complete flavor takes no m")
        elif self.m is None or self.m < 0:
            raise ValueError(f"{self.name} flavor needs m >= 0, got {self.m}")

    @classmethod
    def complete(cls) -> "Flavor":
        return cls()

    @classmethod
    def associated(cls, m: int) -> "Flavor":
        return cls(FlavorType.ASSOCIATED, m)

    @classmethod
    def restricted(cls, m: int) -> "Flavor":
        return cls(FlavorType.RESTRICTED, m)

    @property
    def first_index(self) -> int:
        return self.m if self.name is FlavorType.ASSOCIATED else 0

    @property
    def last_index(self) -> Optional[int]:
        return self.m if self.name is FlavorType.RESTRICTED else None

    def __str__(self) -> str:
        if self.name is FlavorType.COMPLETE:
            return str(self.name)
        return f"{self.name}({self.m})"

    def base_series(self, ctx: CarlitzContext, kind: SeriesKind, order: int) -> SparseSeries:
        return carlitz_series(ctx, kind, order, first=self.first_index, last=self.last_index)


COMPLETE = Flavor.complete()


class _PowerLadder:
    """Cached powers u^k of the base divided by its leading power x^v"""

    def __init__(self, ctx: CarlitzContext, kind: SeriesKind, flavor: Flavor):
        self.ctx = ctx
        self.kind = kind
        self.flavor = flavor
        self.valuation = checked_pow(ctx.r, flavor.first_index, "base valuation")
        self.unit: Optional[SparseSeries] = None
        self.powers: Dict[int, SparseSeries] = {}
        self._lock = threading.Lock()

    def _rebuild(self, order: int) -> None:
        if self.unit is not None:
            order = max(order, 2 * self.unit.order)
        base = self.flavor.base_series(self.ctx, self.kind, order + self.valuation)
        self.unit = base.shift(-self.valuation)
        self.powers = {0: SparseSeries.one(self.ctx.spec, self.unit.order), 1: self.unit}
        logger.debug(f"Rebuilt {self.kind} power ladder for {self.flavor}", order=order)

    def power(self, k: int, order: int) -> SparseSeries:
        """u^k, exact at least through x^order"""
        with self._lock:
            if self.unit is None or self.unit.order < order:
                self._rebuild(order)
            cached = self.powers.get(k)
            if cached is None:
                below = max(j for j in self.powers if j <= k)
                cached = self.powers[below] * self.unit.power(k - below)
                self.powers[k] = cached
            return cached


def _ladder(ctx: CarlitzContext, kind: SeriesKind, flavor: Flavor) -> _PowerLadder:
    return ctx.memo(("stirling-ladder", kind, flavor), lambda: _PowerLadder(ctx, kind, flavor))


def normalized_stirling(
    ctx: CarlitzContext, kind: StirlingKind, n: int, k: int, flavor: Flavor = COMPLETE
) -> RatFunc:
    """Pi(k)/Pi(n) times the Stirling-Carlitz number: the coefficient of z^n in base^k"""
    if n < 0 or k < 0:
        raise ValueError(f"need n, k >= 0, got n={n}, k={k}")
    spec = ctx.spec
    if k == 0:
        return RatFunc.one(spec) if n == 0 else RatFunc.zero(spec)
    ladder = _ladder(ctx, kind.series_kind, flavor)
    exp = n - k * ladder.valuation
    if exp < 0:
        return RatFunc.zero(spec)
    return ladder.power(k, exp).coefficient(exp)


def stirling_c(
    ctx: CarlitzContext, kind: StirlingKind, n: int, k: int, flavor: Flavor = COMPLETE
) -> RatFunc:
    coefficient = normalized_stirling(ctx, kind, n, k, flavor)
    if coefficient.is_zero:
        return coefficient
    return coefficient * RatFunc(ctx.carlitz_factorial(n), ctx.carlitz_factorial(k))


def stirling2_c(ctx: CarlitzContext, n: int, k: int, flavor: Flavor = COMPLETE) -> RatFunc:
    """{n, k}_C for the given flavor"""
    return stirling_c(ctx, StirlingKind.SECOND, n, k, flavor)


def stirling1_c(ctx: CarlitzContext, n: int, k: int, flavor: Flavor = COMPLETE) -> RatFunc:
    """[n, k]_C for the given flavor"""
    return stirling_c(ctx, StirlingKind.FIRST, n, k, flavor)


def assoc2_via_compositions(ctx: CarlitzContext, N: int, n: int, k: int) -> RatFunc:
    """Sum over i_j >= 0 with sum r^(N+i_j) = n + k r^N of 1/(D_(N+i_1) ... D_(N+i_k)).

    Equals Pi(k)/Pi(n + k r^N) {n + k r^N, k}_(C, >= N).
    """
    compositions = enumerate_power_compositions(ctx.r, N, n, k, min_part=0)
    return composition_sum(ctx.spec, compositions, lambda parts: d_weight(ctx, N, parts))


def assoc1_via_compositions(ctx: CarlitzContext, N: int, n: int, k: int) -> RatFunc:
    """Signed L-weight analogue of assoc2_via_compositions for [n + k r^N, k]_(C, >= N)"""
    compositions = enumerate_power_compositions(ctx.r, N, n, k, min_part=0)
    total = composition_sum(ctx.spec, compositions, lambda parts: l_weight(ctx, N, parts))
    return total * ctx.sign(N * k)


def _column_indices(r: int, n: int) -> Iterable[int]:
    """j with r^j - 1 <= n; larger j give k > n and vanish"""
    j = 0
    while checked_pow(r, j) - 1 <= n:
        yield j
        j += 1


def bc_untruncated(ctx: CarlitzContext, n: int) -> RatFunc:
    """BC_n = sum_j (-1)^j D_j / L_j^2 {n, r^j - 1}_C"""
    total = RatFunc.zero(ctx.spec)
    for j in _column_indices(ctx.r, n):
        value = stirling2_c(ctx, n, ctx.r**j - 1)
        if not value.is_zero:
            total = total + ctx.sign(j) * RatFunc(ctx.big_d(j), ctx.big_l(j) ** 2) * value
    return total


def cc_untruncated(ctx: CarlitzContext, n: int) -> RatFunc:
    """CC_n = sum_j 1/L_j [n, r^j - 1]_C"""
    total = RatFunc.zero(ctx.spec)
    for j in _column_indices(ctx.r, n):
        value = stirling1_c(ctx, n, ctx.r**j - 1)
        if not value.is_zero:
            total = total + value * RatFunc(ctx.big_l(0), ctx.big_l(j))
    return total


@dataclass(frozen=True)
class StirlingCarlitzValue:
    n: int
    k: int
    kind: StirlingKind
    flavor: Flavor
    value: RatFunc


def stirling_table(
    ctx: CarlitzContext,
    kind: StirlingKind,
    flavor: Flavor,
    n_values: Iterable[int],
    k_values: Iterable[int],
) -> List[StirlingCarlitzValue]:
    k_values = list(k_values)
    return [
        StirlingCarlitzValue(n, k, kind, flavor, stirling_c(ctx, kind, n, k, flavor))
        for n in n_values
        for k in k_values
    ]
