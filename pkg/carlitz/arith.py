# carlitz/arith.py
"""Integer helpers: checked exponent arithmetic, r-ary digits, binomials mod p."""

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from core.exceptions import ExponentOverflowError

INT64_MAX = 2**63 - 1

# Largest polynomial degree materialized as a dense array
MAX_DENSE_DEGREE = 4_000_000


def checked(value: int, what: str = "value") -> int:
    if value > INT64_MAX or value < -INT64_MAX - 1:
        raise ExponentOverflowError(f"{what} = {value} does not fit in a signed 64-bit integer")
    return value


def checked_pow(base: int, exponent: int, what: str = "power") -> int:
    if exponent < 0:
        raise ValueError(f"negative exponent {exponent}")
    # bound the result before materializing it
    if base > 1 and exponent * math.log2(base) > 64:
        raise ExponentOverflowError(
            f"{what} = {base}^{exponent} does not fit in a signed 64-bit integer"
        )
    return checked(base**exponent, what)


def checked_add(a: int, b: int, what: str = "sum") -> int:
    return checked(a + b, what)


def checked_mul(a: int, b: int, what: str = "product") -> int:
    return checked(a * b, what)


def checked_sub(a: int, b: int, what: str = "difference") -> int:
    return checked(a - b, what)


def composition_target_bound(r: int, N: int, n: int) -> int:
    """n + n r^N, the largest composition target any k <= n produces"""
    return checked_add(n, checked_mul(n, checked_pow(r, N, "r^N"), "n r^N"), "n + n r^N")


def check_dense_degree(degree: int, what: str = "degree") -> int:
    checked(degree, what)
    if degree > MAX_DENSE_DEGREE:
        raise ExponentOverflowError(
            f"{what} {degree} exceeds the dense polynomial limit {MAX_DENSE_DEGREE}"
        )
    return degree


def powers_of(r: int, start: int, limit: int) -> Iterator[Tuple[int, int]]:
    """Yield (i, r^i) for i >= start while r^i <= limit"""
    i = start
    value = checked_pow(r, i)
    while value <= limit:
        yield i, value
        i += 1
        value = checked_mul(value, r, "power of r")


@dataclass(frozen=True)
class RDigits:
    """Base-r digits c_0, c_1, ..., c_m of n, most significant digit nonzero"""

    r: int
    digits: Tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(c * self.r**j for j, c in enumerate(self.digits))

    def __iter__(self):
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, j: int) -> int:
        return self.digits[j]

    def support(self) -> Tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.digits) if c)


def r_digits(r: int, n: int) -> RDigits:
    if r < 2:
        raise ValueError(f"base must be at least 2, got {r}")
    if n < 0:
        raise ValueError(f"cannot expand negative {n}")
    digits = []
    while n:
        n, c = divmod(n, r)
        digits.append(c)
    return RDigits(r, tuple(digits))


def binom_mod_p(m: int, k: int, p: int) -> int:
    """C(m, k) mod p by Lucas' theorem"""
    if k < 0 or k > m:
        return 0
    result = 1
    while k:
        m, mi = divmod(m, p)
        k, ki = divmod(k, p)
        if ki > mi:
            return 0
        result = result * math.comb(mi, ki) % p
    return result


def multinomial(counts: Iterable[int]) -> int:
    """Exact number of distinct arrangements of a multiset with the given counts"""
    counts = list(counts)
    result = math.factorial(sum(counts))
    for c in counts:
        result //= math.factorial(c)
    return result


def multinomial_mod_p(counts: Iterable[int], p: int) -> int:
    """Multinomial coefficient mod p as a product of Lucas binomials"""
    result, total = 1, 0
    for c in counts:
        total += c
        result = result * binom_mod_p(total, c, p) % p
        if not result:
            return 0
    return result


def part_counts(parts: Iterable[int]) -> Tuple[int, ...]:
    return tuple(Counter(parts).values())
