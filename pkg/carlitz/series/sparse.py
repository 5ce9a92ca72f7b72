# carlitz/series/sparse.py
"""Truncated power series in x over K with sparse exponent support.

A series is exact through its order B: coefficients of x^m for m > B are
unknown and never stored. Binary operations keep the weaker guarantee.
"""

from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from core.algebra import FieldSpec, RatFunc
from core.exceptions import FieldMismatchError, NonUnitSeriesError, TruncationError

Scalar = Union[RatFunc, int]


class SparseSeries:
    """Sum of c_m x^m for m in a sparse support, known up to x^order"""

    __slots__ = ("spec", "order", "_terms")

    def __init__(
        self,
        spec: FieldSpec,
        terms: Union[Mapping[int, RatFunc], Iterable[Tuple[int, RatFunc]]],
        order: int,
    ):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        kept: Dict[int, RatFunc] = {}
        for exp, coef in items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp} in a power series")
            if coef.spec != spec:
                raise FieldMismatchError(f"coefficient over {coef.spec} in a {spec} series")
            if exp <= order and not coef.is_zero:
                kept[exp] = coef
        self.spec = spec
        self.order = order
        self._terms = dict(sorted(kept.items()))

    # Constructors

    @classmethod
    def zero(cls, spec: FieldSpec, order: int) -> "SparseSeries":
        return cls(spec, {}, order)

    @classmethod
    def one(cls, spec: FieldSpec, order: int) -> "SparseSeries":
        return cls(spec, {0: RatFunc.one(spec)}, order)

    @classmethod
    def monomial(cls, exp: int, coef: RatFunc, order: int) -> "SparseSeries":
        return cls(coef.spec, {exp: coef}, order)

    # Inspection

    @property
    def terms(self) -> Mapping[int, RatFunc]:
        return MappingProxyType(self._terms)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(self._terms)

    def items(self) -> Iterator[Tuple[int, RatFunc]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exp: int) -> RatFunc:
        if exp > self.order:
            raise TruncationError(f"x^{exp} lies beyond the series order {self.order}")
        if exp < 0:
            return RatFunc.zero(self.spec)
        return self._terms.get(exp) or RatFunc.zero(self.spec)

    @property
    def constant_term(self) -> RatFunc:
        return self.coefficient(0)

    @property
    def valuation(self) -> Optional[int]:
        """Smallest exponent with a nonzero coefficient, None for the zero series"""
        return next(iter(self._terms), None)

    def truncate(self, order: int) -> "SparseSeries":
        if order >= self.order:
            return self
        return SparseSeries(self.spec, self._terms, order)

    def shift(self, amount: int) -> "SparseSeries":
        """Multiply by x^amount; a negative amount divides by a power of x"""
        if self._terms and next(iter(self._terms)) + amount < 0:
            raise ValueError(f"x^{-amount} does not divide the series")
        if self.order + amount < 0:
            raise TruncationError(f"shifting by {amount} leaves no known coefficients")
        return SparseSeries(
            self.spec, {exp + amount: c for exp, c in self._terms.items()}, self.order + amount
        )

    # Arithmetic

    def _check(self, other: "SparseSeries") -> None:
        if other.spec != self.spec:
            raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec} series")

    def __add__(self, other: "SparseSeries") -> "SparseSeries":
        self._check(other)
        order = min(self.order, other.order)
        terms = {exp: c for exp, c in self._terms.items() if exp <= order}
        for exp, c in other._terms.items():
            if exp > order:
                break
            terms[exp] = terms[exp] + c if exp in terms else c
        return SparseSeries(self.spec, terms, order)

    def __neg__(self) -> "SparseSeries":
        return SparseSeries(self.spec, {exp: -c for exp, c in self._terms.items()}, self.order)

    def __sub__(self, other: "SparseSeries") -> "SparseSeries":
        return self + (-other)

    def scale(self, factor: Scalar) -> "SparseSeries":
        if isinstance(factor, int):
            factor = RatFunc.from_int(self.spec, factor)
        return SparseSeries(
            self.spec, {exp: c * factor for exp, c in self._terms.items()}, self.order
        )

    def __mul__(self, other: Union["SparseSeries", Scalar]) -> "SparseSeries":
        if not isinstance(other, SparseSeries):
            return self.scale(other)
        self._check(other)
        order = min(self.order, other.order)
        acc: Dict[int, RatFunc] = {}
        for i, a in self._terms.items():
            if i > order:
                break
            for j, b in other._terms.items():
                exp = i + j
                if exp > order:
                    break
                product = a * b
                acc[exp] = acc[exp] + product if exp in acc else product
        return SparseSeries(self.spec, acc, order)

    __rmul__ = __mul__

    def inverse(self) -> "SparseSeries":
        """g with f g = 1 + O(x^(B+1)) by g_m = -f_0^(-1) sum_{0<j<=m} f_j g_(m-j)"""
        f0 = self._terms.get(0)
        if f0 is None:
            raise NonUnitSeriesError("series with zero constant term has no inverse")
        f0_inv = f0.inverse()
        neg_f0_inv = -f0_inv
        positive = [(j, c) for j, c in self._terms.items() if j > 0]
        inverse: Dict[int, RatFunc] = {0: f0_inv}
        for m in range(1, self.order + 1):
            total = None
            for j, c in positive:
                if j > m:
                    break
                previous = inverse.get(m - j)
                if previous is not None:
                    term = c * previous
                    total = term if total is None else total + term
            if total is not None and not total.is_zero:
                inverse[m] = total * neg_f0_inv
        return SparseSeries(self.spec, inverse, self.order)

    def power(self, k: int, order: Optional[int] = None) -> "SparseSeries":
        """k-th power by binary powering, truncated at order (default: own order)"""
        if k < 0:
            raise ValueError(f"negative power {k}; invert first")
        order = self.order if order is None else min(order, self.order)
        result = SparseSeries.one(self.spec, order)
        base = self.truncate(order)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __pow__(self, k: int) -> "SparseSeries":
        return self.power(k)

    # Comparison and display

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseSeries):
            return NotImplemented
        return (
            self.spec == other.spec and self.order == other.order and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.order, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coef in self._terms.items():
            if exp == 0:
                parts.append(str(coef))
            elif exp == 1:
                parts.append(f"{coef}*x")
            else:
                parts.append(f"{coef}*x^{exp}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SparseSeries({self}, order={self.order})"

    def to_dict(self) -> dict:
        return {
            "terms": [
                {"exp": exp, "num": str(c.num), "den": str(c.den)} for exp, c in self._terms.items()
            ],
            "order": self.order,
        }

    @classmethod
    def from_dict(cls, spec: FieldSpec, data: Mapping) -> "SparseSeries":
        from core.algebra.text import parse_poly

        terms = {
            int(term["exp"]): RatFunc(parse_poly(spec, term["num"]), parse_poly(spec, term["den"]))
            for term in data["terms"]
        }
        return cls(spec, terms, int(data["order"]))


def series_add(f: SparseSeries, g: SparseSeries) -> SparseSeries:
    return f + g


def series_mul(f: SparseSeries, g: SparseSeries) -> SparseSeries:
    return f * g


def series_inv(f: SparseSeries) -> SparseSeries:
    return f.inverse()
