# core/algebra/ratfunc.py
"""Rational functions K = F_r(T) in canonical reduced form.

A ``RatFunc`` always satisfies gcd(num, den) = 1 with a monic denominator,
and zero is stored as 0/1, so equality is structural. Addition and
multiplication follow Henrici's scheme: gcds are taken against the smaller
factors instead of reducing the full cross products.
"""

from typing import Iterable, Optional, Union

from core.exceptions import FieldDivisionError, FieldMismatchError

from .field import FieldSpec
from .poly import Poly, poly_gcd

Operand = Union["RatFunc", Poly, int]


class RatFunc:
    """Element of K = F_r(T)"""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Optional[Poly] = None):
        if den is None:
            den = Poly.one(num.spec)
        if num.spec != den.spec:
            raise FieldMismatchError(f"cannot combine {num.spec} and {den.spec}")
        if den.is_zero:
            raise FieldDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = num, Poly.one(num.spec)
        else:
            g = poly_gcd(num, den)
            if not g.is_one:
                num, den = num // g, den // g
            if not den.is_monic:
                lead_inv = num.spec.inverse(den.lead)
                num, den = num.scale(lead_inv), den.scale(lead_inv)
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, num: Poly, den: Poly) -> "RatFunc":
        """Wrap a pair already known to be canonical"""
        value = object.__new__(cls)
        value.num = num
        value.den = den
        return value

    @classmethod
    def zero(cls, spec: FieldSpec) -> "RatFunc":
        return cls._make(Poly.zero(spec), Poly.one(spec))

    @classmethod
    def one(cls, spec: FieldSpec) -> "RatFunc":
        return cls._make(Poly.one(spec), Poly.one(spec))

    @classmethod
    def from_int(cls, spec: FieldSpec, n: int) -> "RatFunc":
        return cls._make(Poly.constant(spec, n), Poly.one(spec))

    @classmethod
    def parse(cls, spec: FieldSpec, text: str) -> "RatFunc":
        from .text import parse_ratfunc

        return parse_ratfunc(spec, text)

    @staticmethod
    def sum(values: Iterable["RatFunc"], spec: FieldSpec) -> "RatFunc":
        total = RatFunc.zero(spec)
        for value in values:
            total = total + value
        return total

    @property
    def spec(self) -> FieldSpec:
        return self.num.spec

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num.is_one and self.den.is_one

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def canonical(self) -> "RatFunc":
        return RatFunc(self.num, self.den)

    def _coerce(self, other: Operand) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
            return other
        if isinstance(other, Poly):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
            return RatFunc._make(other, Poly.one(self.spec))
        if isinstance(other, int):
            return RatFunc.from_int(self.spec, other)
        return NotImplemented

    # Arithmetic

    def __add__(self, other: Operand):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        a, b, c, d = self.num, self.den, other.num, other.den
        if b.is_one and d.is_one:
            return RatFunc._make(a + c, b)
        if b == d:
            total = a + c
            if total.is_zero:
                return RatFunc.zero(self.spec)
            g = poly_gcd(total, b)
            if g.is_one:
                return RatFunc._make(total, b)
            return RatFunc._make(total // g, b // g)
        g = poly_gcd(b, d)
        if g.is_one:
            return RatFunc._make(a * d + c * b, b * d)
        b1, d1 = b // g, d // g
        total = a * d1 + c * b1
        if total.is_zero:
            return RatFunc.zero(self.spec)
        g2 = poly_gcd(total, g)
        if g2.is_one:
            return RatFunc._make(total, b1 * d)
        return RatFunc._make(total // g2, b1 * (d // g2))

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._make(-self.num, self.den)

    def __sub__(self, other: Operand):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Operand):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Operand):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.zero(self.spec)
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        g2 = poly_gcd(c, b)
        if not g1.is_one:
            a, d = a // g1, d // g1
        if not g2.is_one:
            c, b = c // g2, b // g2
        return RatFunc._make(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise FieldDivisionError("zero has no inverse in F_r(T)")
        lead_inv = self.spec.inverse(self.num.lead)
        return RatFunc._make(self.den.scale(lead_inv), self.num.scale(lead_inv))

    def __truediv__(self, other: Operand):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Operand):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return RatFunc.one(self.spec)
        return RatFunc._make(self.num**exponent, self.den**exponent)

    # Comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatFunc.from_int(self.spec, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        from .text import format_ratfunc

        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({self.spec}, {self})"


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """Apply op in {"add", "sub", "mul", "div"} to two elements of K"""
    if a.spec != b.spec:
        raise FieldMismatchError(f"cannot combine {a.spec} and {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown rational function operation: {op}")
