# carlitz/special/types.py
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict

from core.algebra import RatFunc

from ..arith import composition_target_bound
from ..context import CarlitzContext
from ..series import SeriesKind


class Family(Enum):
    """Truncated Bernoulli-Carlitz or Cauchy-Carlitz numbers"""

    BC = "bc"
    CC = "cc"

    def __str__(self):
        return self.value

    @property
    def series_kind(self) -> SeriesKind:
        return SeriesKind.EXP if self is Family.BC else SeriesKind.LOG

    @property
    def label(self) -> str:
        return self.name


class Method(Enum):
    """Computation routes, in the order they are reported"""

    SERIES = "series"
    COMPOSITION = "composition"
    BINOMIAL = "binomial"
    STIRLING = "stirling"
    QUOTIENT = "quotient"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SpecialNumberQuery:
    family: Family
    ctx: CarlitzContext
    N: int
    n: int
    method: Method = Method.SERIES

    def __post_init__(self):
        if self.N < 0 or self.n < 0:
            raise ValueError(f"need N, n >= 0, got N={self.N}, n={self.n}")
        # the composition targets n + k r^N for k <= n must stay in range
        composition_target_bound(self.ctx.r, self.N, self.n)

    @property
    def label(self) -> str:
        return f"{self.family.label}_{{{self.N},{self.n}}}"


@dataclass
class SpecialNumberResult:
    """BC_{N,n} or CC_{N,n} together with value / Pi(n)"""

    query: SpecialNumberQuery
    value: RatFunc
    normalized: RatFunc
    elapsed: float = 0.0
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def family(self) -> Family:
        return self.query.family

    @property
    def method(self) -> Method:
        return self.query.method

    @property
    def N(self) -> int:
        return self.query.N

    @property
    def n(self) -> int:
        return self.query.n

    @property
    def is_zero(self) -> bool:
        return self.value.is_zero
