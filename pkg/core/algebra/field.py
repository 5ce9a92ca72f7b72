# core/algebra/field.py
"""Finite fields F_r, r = p^e, in polynomial basis over F_p.

An element is encoded as an integer code 0 <= code < r whose base-p digits
are its coordinates in the basis 1, u, ..., u^(e-1). The prime subfield is
therefore the codes 0..p-1, and the zero and one elements are codes 0 and 1.
Prime fields compute with plain modular arithmetic; extension fields use
precomputed addition and multiplication tables.
"""

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from core.exceptions import FieldDivisionError, FieldMismatchError, InvalidFieldError

# Monic irreducible moduli, coefficients in ascending degree
DEFAULT_MODULI: Dict[int, Tuple[int, Tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),  # u^2 + u + 1
    8: (2, (1, 1, 0, 1)),  # u^3 + u + 1
    9: (3, (1, 0, 1)),  # u^2 + 1
    16: (2, (1, 1, 0, 0, 1)),  # u^4 + u + 1
    25: (5, (2, 0, 1)),  # u^2 + 2
    27: (3, (1, 2, 0, 1)),  # u^3 + 2u + 1
}

# Largest extension field order for which tables are built
MAX_TABLE_ORDER = 1024

Codes = Union[int, np.integer, np.ndarray]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise InvalidFieldError(f"{n} has no prime factor")
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def _remainder_mod_p(a: Sequence[int], b: Sequence[int], p: int) -> list:
    """Remainder of a by the monic b, both ascending coefficient lists over F_p"""
    rem = [c % p for c in a]
    db = len(b) - 1
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - c * b[j]) % p
    return rem[:db]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= e/2"""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_remainder_mod_p(modulus, list(tail) + [1], p)):
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_r with r = p^e"""

    p: int
    e: int = 1
    modulus: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidFieldError(f"characteristic {self.p} is not prime")
        if self.e < 1:
            raise InvalidFieldError(f"extension degree must be >= 1, got {self.e}")

        if self.e == 1:
            object.__setattr__(self, "modulus", ())
            return

        if self.p**self.e > MAX_TABLE_ORDER:
            raise InvalidFieldError(
                f"F_{self.p}^{self.e} is larger than the supported order {MAX_TABLE_ORDER}"
            )
        modulus = tuple(int(c) for c in self.modulus)
        if not modulus:
            default = DEFAULT_MODULI.get(self.p**self.e)
            if default is None or default[0] != self.p:
                raise InvalidFieldError(f"no default modulus for r = {self.p ** self.e}")
            modulus = default[1]
        if len(modulus) != self.e + 1 or modulus[-1] != 1:
            raise InvalidFieldError(f"modulus must be monic of degree {self.e}: {modulus}")
        if any(not 0 <= c < self.p for c in modulus):
            raise InvalidFieldError(f"modulus coefficients must lie in [0, {self.p})")
        if not is_irreducible(modulus, self.p):
            raise InvalidFieldError(f"modulus {modulus} is reducible over F_{self.p}")
        object.__setattr__(self, "modulus", modulus)

    @classmethod
    def of_order(cls, r: int, modulus: Optional[Sequence[int]] = None) -> "FieldSpec":
        """Field of order r, using the built-in modulus when none is given"""
        p = smallest_prime_factor(r)
        e, rest = 0, r
        while rest % p == 0:
            rest //= p
            e += 1
        if rest != 1:
            raise InvalidFieldError(f"{r} is not a prime power")
        return cls(p=p, e=e, modulus=tuple(modulus or ()))

    @property
    def r(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __str__(self) -> str:
        return f"F_{self.r}"

    # Tables for extension fields

    @cached_property
    def _digits(self) -> np.ndarray:
        codes = np.arange(self.r, dtype=np.int64)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.e)], axis=1)

    @cached_property
    def _weights(self) -> np.ndarray:
        return np.array([self.p**i for i in range(self.e)], dtype=np.int64)

    @cached_property
    def _add_table(self) -> np.ndarray:
        digits = self._digits
        summed = (digits[:, None, :] + digits[None, :, :]) % self.p
        return self._frozen((summed * self._weights).sum(axis=-1))

    @cached_property
    def _mul_table(self) -> np.ndarray:
        digits, e, p = self._digits, self.e, self.p
        product = np.zeros((self.r, self.r, 2 * e - 1), dtype=np.int64)
        for i in range(e):
            for j in range(e):
                product[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
        # u^e = -(m_0 + m_1 u + ... + m_{e-1} u^(e-1))
        for top in range(2 * e - 2, e - 1, -1):
            lead = product[:, :, top] % p
            for i, m in enumerate(self.modulus[:e]):
                product[:, :, top - e + i] -= lead * m
            product[:, :, top] = 0
        reduced = product[:, :, :e] % p
        return self._frozen((reduced * self._weights).sum(axis=-1))

    @cached_property
    def _neg_table(self) -> np.ndarray:
        return self._frozen(((-self._digits % self.p) * self._weights).sum(axis=-1))

    @cached_property
    def _inv_table(self) -> np.ndarray:
        inverses = np.zeros(self.r, dtype=np.int64)
        rows, cols = np.nonzero(self._mul_table == 1)
        inverses[rows] = cols
        return self._frozen(inverses)

    @staticmethod
    def _frozen(array: np.ndarray) -> np.ndarray:
        array = np.ascontiguousarray(array, dtype=np.int64)
        array.setflags(write=False)
        return array

    # Element-wise arithmetic on codes (ints or int64 arrays)

    def add(self, x: Codes, y: Codes) -> Codes:
        if self.e == 1:
            return (x + y) % self.p
        return self._add_table[x, y]

    def neg(self, x: Codes) -> Codes:
        if self.e == 1:
            return (-x) % self.p
        return self._neg_table[x]

    def sub(self, x: Codes, y: Codes) -> Codes:
        if self.e == 1:
            return (x - y) % self.p
        return self._add_table[x, self._neg_table[y]]

    def mul(self, x: Codes, y: Codes) -> Codes:
        if self.e == 1:
            return (x * y) % self.p
        return self._mul_table[x, y]

    def inverse(self, x: int) -> int:
        x = int(x)
        if x == 0:
            raise FieldDivisionError(f"zero has no inverse in {self}")
        if self.e == 1:
            return pow(x, -1, self.p)
        return int(self._inv_table[x])

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield"""
        return int(n) % self.p

    def check_code(self, code: int) -> int:
        code = int(code)
        if not 0 <= code < self.r:
            raise InvalidFieldError(f"{code} is not an element code of {self}")
        return code

    def code_from_rep(self, rep: Sequence[int]) -> int:
        if len(rep) != self.e or any(not 0 <= int(c) < self.p for c in rep):
            raise InvalidFieldError(f"{tuple(rep)} is not a coordinate vector of {self}")
        return sum(int(c) * self.p**i for i, c in enumerate(rep))

    def rep_of(self, code: int) -> Tuple[int, ...]:
        code = int(code)
        return tuple((code // self.p**i) % self.p for i in range(self.e))

    def element(self, value: Union[int, Sequence[int]]) -> "FieldElem":
        if isinstance(value, (tuple, list)):
            return FieldElem(self, self.code_from_rep(value))
        return FieldElem(self, self.check_code(value))

    def elements(self):
        return [FieldElem(self, code) for code in range(self.r)]


@dataclass(frozen=True)
class FieldElem:
    """An element of F_r"""

    spec: FieldSpec
    code: int

    @property
    def rep(self) -> Tuple[int, ...]:
        return self.spec.rep_of(self.code)

    @property
    def is_zero(self) -> bool:
        return self.code == 0

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine {self.spec} and {other.spec}")
            return other.code
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def _wrap(self, code) -> "FieldElem":
        return FieldElem(self.spec, int(code))

    def __add__(self, other):
        code = self._other(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._other(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.sub(self.code, code))

    def __rsub__(self, other):
        code = self._other(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.sub(code, self.code))

    def __mul__(self, other):
        code = self._other(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.mul(self.code, code))

    __rmul__ = __mul__

    def __truediv__(self, other):
        code = self._other(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.mul(self.code, self.spec.inverse(code)))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.code))

    def inverse(self) -> "FieldElem":
        return self._wrap(self.spec.inverse(self.code))

    def __pow__(self, exponent: int) -> "FieldElem":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = 1, self.code
        while exponent:
            if exponent & 1:
                result = int(self.spec.mul(result, base))
            base = int(self.spec.mul(base, base))
            exponent >>= 1
        return self._wrap(result)

    def __str__(self) -> str:
        if self.spec.is_prime_field:
            return str(self.code)
        return "(" + ",".join(str(c) for c in self.rep) + ")"


def ff_arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    """Apply op in {"add", "sub", "mul", "div"} to two elements of the same field"""
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
    raise ValueError(f"unknown field operation: {op}")
