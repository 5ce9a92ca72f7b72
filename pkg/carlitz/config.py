# carlitz/config.py
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from core.algebra import FieldSpec
from core.exceptions import ConfigurationError, InvalidFieldError

from .special import Family, Method
from .special.routes import DEFAULT_QUOTIENT_MAX_N
from .stirling import COMPLETE, Flavor, FlavorType, StirlingKind

# Largest n a table may reach without --allow-large
DEFAULT_MAX_TABLE_N = 100_000

_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?$")


class RunFamily(Enum):
    BC = "bc"
    CC = "cc"
    STIRLING1 = "stirling1"
    STIRLING2 = "stirling2"

    def __str__(self):
        return self.value

    @property
    def special_family(self) -> Optional[Family]:
        return {RunFamily.BC: Family.BC, RunFamily.CC: Family.CC}.get(self)

    @property
    def stirling_kind(self) -> Optional[StirlingKind]:
        return {
            RunFamily.STIRLING1: StirlingKind.FIRST,
            RunFamily.STIRLING2: StirlingKind.SECOND,
        }.get(self)

    @property
    def is_stirling(self) -> bool:
        return self.stirling_kind is not None


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IntRange:
    """Inclusive integer range start..stop; empty when stop < start"""

    start: int
    stop: int
    step: int = 1

    @classmethod
    def single(cls, value: int) -> "IntRange":
        return cls(value, value)

    @classmethod
    def parse(cls, text: str, step: int = 1) -> "IntRange":
        match = _RANGE_RE.match(str(text))
        if not match:
            raise ConfigurationError(f"expected an integer or a range a..b, got {text!r}")
        start = int(match.group(1))
        stop = int(match.group(2)) if match.group(2) is not None else start
        return cls(start, stop, step)

    def __post_init__(self):
        if self.step < 1:
            raise ConfigurationError(f"range step must be >= 1, got {self.step}")

    @property
    def values(self) -> range:
        return range(self.start, self.stop + 1, self.step)

    @property
    def is_empty(self) -> bool:
        return self.stop < self.start

    @property
    def is_single(self) -> bool:
        return self.start == self.stop

    def __str__(self) -> str:
        return str(self.start) if self.is_single else f"{self.start}..{self.stop}"


def parse_flavor(name: str, m: Optional[int]) -> Flavor:
    aliases = {"complete": FlavorType.COMPLETE, "assoc": FlavorType.ASSOCIATED,
               "associated": FlavorType.ASSOCIATED, "restricted": FlavorType.RESTRICTED}
    flavor_type = aliases.get((name or "complete").lower())
    if flavor_type is None:
        raise ConfigurationError(f"unknown flavor {name!r}")
    if flavor_type is FlavorType.COMPLETE:
        if m is not None:
            raise ConfigurationError("the complete flavor takes no --m")
        return COMPLETE
    if m is None or m < 0:
        raise ConfigurationError(f"the {flavor_type} flavor needs --m >= 0")
    return Flavor(flavor_type, m)


def parse_methods(name: Optional[str]) -> Tuple[Method, ...]:
    if not name:
        return (Method.SERIES,)
    if name == "all":
        return tuple(Method)
    try:
        return (Method(name),)
    except ValueError:
        raise ConfigurationError(f"unknown method {name!r}") from None


@dataclass
class RunConfig:
    """Options of one compute or table run"""

    family: RunFamily
    r: int
    p: Optional[int] = None
    e: Optional[int] = None
    modulus: Tuple[int, ...] = ()

    # Index ranges; N is unused by the Stirling families, k by BC/CC
    N_range: IntRange = field(default_factory=lambda: IntRange.single(0))
    n_range: IntRange = field(default_factory=lambda: IntRange.single(0))
    k_range: IntRange = field(default_factory=lambda: IntRange.single(0))

    flavor: Flavor = COMPLETE
    methods: Tuple[Method, ...] = (Method.SERIES,)
    method_given: bool = False

    output_format: OutputFormat = OutputFormat.TEXT
    output_path: Optional[Path] = None

    workers: int = 1
    allow_large: bool = False
    max_table_n: int = DEFAULT_MAX_TABLE_N
    quotient_max_n: int = DEFAULT_QUOTIENT_MAX_N

    def field_spec(self) -> FieldSpec:
        try:
            spec = FieldSpec.of_order(self.r, self.modulus or None)
        except InvalidFieldError as e:
            raise ConfigurationError(str(e)) from e
        if self.p is not None and self.p != spec.p:
            raise ConfigurationError(f"r = {self.r} is not a power of p = {self.p}")
        if self.e is not None and self.e != spec.e:
            raise ConfigurationError(f"r = {self.r} is not {self.p or spec.p}^{self.e}")
        return spec

    def validate(self, single: bool = False) -> FieldSpec:
        """Check the invariants; single runs need one-element ranges"""
        spec = self.field_spec()
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")
        ranges = self._active_ranges()
        if single:
            for name, value in ranges:
                if not value.is_single:
                    raise ConfigurationError(f"compute takes a single --{name}, got {value}")
        for name, value in ranges:
            if not value.is_empty and value.start < 0:
                raise ConfigurationError(f"--{name} must be >= 0, got {value}")
        if (
            not single
            and not self.n_range.is_empty
            and self.n_range.stop > self.max_table_n
            and not self.allow_large
        ):
            raise ConfigurationError(
                f"n up to {self.n_range.stop} exceeds {self.max_table_n}; pass --allow-large"
            )
        if self.family.is_stirling:
            if self.method_given:
                raise ConfigurationError(f"--method is not valid for {self.family}")
        elif self.flavor != COMPLETE:
            raise ConfigurationError(f"--flavor is not valid for {self.family}")
        return spec

    def _active_ranges(self) -> List[Tuple[str, IntRange]]:
        if self.family.is_stirling:
            return [("n", self.n_range), ("k", self.k_range)]
        return [("N", self.N_range), ("n", self.n_range)]
