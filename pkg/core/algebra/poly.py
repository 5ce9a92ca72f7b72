# core/algebra/poly.py
"""Dense polynomials in T over F_r.

Coefficients are element codes (see ``field.py``) held in read-only int64
numpy arrays indexed by degree, with no trailing zeros.
"""

from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from core.exceptions import FieldDivisionError, FieldMismatchError

from .field import FieldElem, FieldSpec

# Degree reported for the zero polynomial
ZERO_DEGREE = -1

# Both factors longer than this switch prime-field multiplication to Karatsuba
KARATSUBA_THRESHOLD = 512

_EMPTY = np.zeros(0, dtype=np.int64)
_EMPTY.setflags(write=False)


def _trim(coeffs: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(coeffs)
    if not nonzero.size:
        return _EMPTY
    return coeffs[: nonzero[-1] + 1]


def _plain_convolve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # each output coefficient is a sum of at most min(len) products below p^2
    if min(len(a), len(b)) * (p - 1) ** 2 < 2**62:
        return np.convolve(a, b) % p
    wide = np.convolve(a.astype(object), b.astype(object)) % p
    return wide.astype(np.int64)


def _karatsuba(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if min(len(a), len(b)) <= KARATSUBA_THRESHOLD:
        return _plain_convolve(a, b, p)
    m = min(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    low = _karatsuba(a0, b0, p)
    high = _karatsuba(a1, b1, p)
    a_sum = a1.copy()
    a_sum[:m] = (a_sum[:m] + a0) % p
    b_sum = b1.copy()
    b_sum[:m] = (b_sum[:m] + b0) % p
    middle = _karatsuba(a_sum, b_sum, p)
    middle[: len(low)] -= low
    middle -= high
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    out[: len(low)] += low
    out[m : m + len(middle)] += middle
    out[2 * m : 2 * m + len(high)] += high
    return out % p


def mul_arrays(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if not a.size or not b.size:
        return _EMPTY
    if spec.is_prime_field:
        return _karatsuba(a, b, spec.p)
    if len(a) > len(b):
        a, b = b, a
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    for i, c in enumerate(a):
        if c:
            window = out[i : i + len(b)]
            out[i : i + len(b)] = spec.add(window, spec.mul(int(c), b))
    return out


def add_arrays(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    out[: len(b)] = spec.add(out[: len(b)], b)
    return out


def sub_arrays(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros(max(len(a), len(b)), dtype=np.int64)
    out[: len(a)] = a
    out[: len(b)] = spec.sub(out[: len(b)], b)
    return out


def divmod_arrays(
    spec: FieldSpec, a: np.ndarray, b: np.ndarray
) -> Tuple[np.ndarray, np.ndarray]:
    """Long division of a by the nonzero b"""
    if not b.size:
        raise FieldDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return _EMPTY, a
    lead_inv = spec.inverse(int(b[-1]))
    divisor = b if lead_inv == 1 else spec.mul(b, lead_inv)
    rem = a.copy()
    quot = np.zeros(len(a) - db, dtype=np.int64)
    for i in range(len(a) - 1 - db, -1, -1):
        c = int(rem[i + db])
        if c:
            quot[i] = c
            rem[i : i + db + 1] = spec.sub(rem[i : i + db + 1], spec.mul(divisor, c))
    if lead_inv != 1:
        quot = spec.mul(quot, lead_inv)
    return _trim(quot), _trim(rem[:db])


class Poly:
    """Element of A = F_r[T]"""

    __slots__ = ("spec", "_coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Union[int, FieldElem]] = ()):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElem):
                if c.spec != spec:
                    raise FieldMismatchError(f"coefficient from {c.spec} in a {spec} polynomial")
                codes.append(c.code)
            else:
                codes.append(spec.check_code(c))
        self.spec = spec
        self._coeffs = self._seal(_trim(np.array(codes, dtype=np.int64)))

    @staticmethod
    def _seal(coeffs: np.ndarray) -> np.ndarray:
        if coeffs.flags.writeable:
            coeffs.setflags(write=False)
        return coeffs

    @classmethod
    def _wrap(cls, spec: FieldSpec, coeffs: np.ndarray) -> "Poly":
        poly = object.__new__(cls)
        poly.spec = spec
        poly._coeffs = cls._seal(_trim(np.asarray(coeffs, dtype=np.int64)))
        return poly

    # Constructors

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Poly":
        return cls._wrap(spec, _EMPTY)

    @classmethod
    def one(cls, spec: FieldSpec) -> "Poly":
        return cls.constant(spec, 1)

    @classmethod
    def constant(cls, spec: FieldSpec, n: int) -> "Poly":
        """The integer n mapped into the prime subfield"""
        return cls._wrap(spec, np.array([spec.from_int(n)], dtype=np.int64))

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, code: int = 1) -> "Poly":
        coeffs = np.zeros(degree + 1, dtype=np.int64)
        coeffs[degree] = spec.check_code(code)
        return cls._wrap(spec, coeffs)

    @classmethod
    def variable(cls, spec: FieldSpec) -> "Poly":
        return cls.monomial(spec, 1)

    @classmethod
    def parse(cls, spec: FieldSpec, text: str) -> "Poly":
        from .text import parse_poly

        return parse_poly(spec, text)

    # Inspection

    @property
    def coefficients(self) -> np.ndarray:
        """Read-only code array, index = degree"""
        return self._coeffs

    @property
    def coeffs(self) -> Tuple[FieldElem, ...]:
        return tuple(FieldElem(self.spec, int(c)) for c in self._coeffs)

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs.size

    @property
    def is_one(self) -> bool:
        return len(self._coeffs) == 1 and self._coeffs[0] == 1

    @property
    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    @property
    def lead(self) -> int:
        """Code of the leading coefficient (0 for the zero polynomial)"""
        return int(self._coeffs[-1]) if self._coeffs.size else 0

    @property
    def is_monic(self) -> bool:
        return self.lead == 1

    def __getitem__(self, degree: int) -> FieldElem:
        if 0 <= degree < len(self._coeffs):
            return FieldElem(self.spec, int(self._coeffs[degree]))
        return FieldElem(self.spec, 0)

    # Arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
            return other
        if isinstance(other, int):
            return Poly.constant(self.spec, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.spec, add_arrays(self.spec, self._coeffs, other._coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.spec, sub_arrays(self.spec, self._coeffs, other._coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Poly":
        return Poly._wrap(self.spec, self.spec.neg(self._coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Poly._wrap(self.spec, mul_arrays(self.spec, self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def scale(self, code: int) -> "Poly":
        """Multiply every coefficient by the field element with the given code"""
        return Poly._wrap(self.spec, self.spec.mul(self._coeffs, int(code)))

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        other = self._coerce(other)
        quot, rem = divmod_arrays(self.spec, self._coeffs, other._coeffs)
        return Poly._wrap(self.spec, quot), Poly._wrap(self.spec, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        quot, rem = divmod(self, other)
        if not rem.is_zero:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.one(self.spec)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def monic(self) -> "Poly":
        if self.is_zero or self.is_monic:
            return self
        return self.scale(self.spec.inverse(self.lead))

    def frobenius(self) -> "Poly":
        """f(T)^r, computed as f(T^r) since c^r = c on F_r"""
        if self.is_constant:
            return self
        r = self.spec.r
        coeffs = np.zeros(self.degree * r + 1, dtype=np.int64)
        coeffs[::r] = self._coeffs
        return Poly._wrap(self.spec, coeffs)

    # Comparison and display

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self) -> int:
        return hash((self.spec, self._coeffs.tobytes()))

    def __str__(self) -> str:
        from .text import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.spec}, {self})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor"""
    if f.spec != g.spec:
        raise FieldMismatchError(f"cannot combine {f.spec} and {g.spec}")
    if f.is_zero and g.is_zero:
        raise FieldDivisionError("gcd(0, 0) is undefined")
    if f.degree == 0 or g.degree == 0:
        return Poly.one(f.spec)
    a, b = (f.coefficients, g.coefficients)
    if len(a) < len(b):
        a, b = b, a
    while b.size:
        if len(b) == 1:
            return Poly.one(f.spec)
        a, b = b, divmod_arrays(f.spec, a, b)[1]
    return Poly._wrap(f.spec, a).monic()


def poly_arith(f: Poly, g: Poly, op: str) -> Poly:
    """Apply op in {"add", "sub", "mul"} to two polynomials over the same field"""
    if f.spec != g.spec:
        raise FieldMismatchError(f"cannot combine {f.spec} and {g.spec}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation: {op}")


def poly_from_codes(spec: FieldSpec, codes: Sequence[int]) -> Poly:
    return Poly._wrap(spec, np.array(codes, dtype=np.int64))
