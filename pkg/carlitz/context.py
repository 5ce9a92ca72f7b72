# carlitz/context.py
import threading
from typing import Callable, Dict, Hashable, Optional, Sequence, TypeVar

from core.algebra import FieldSpec, Poly, RatFunc
from core.logging import get_logger

from .arith import check_dense_degree, checked_mul, checked_pow, r_digits

logger = get_logger("carlitz_lab.carlitz.context")

V = TypeVar("V")


class CarlitzContext:
    """Memoized Carlitz building blocks over F_r.

    Holds [i] = T^(r^i) - T, D_i = [i] D_{i-1}^r, L_i = [i] L_{i-1} and the
    Carlitz factorial. Lookups may run concurrently; a value computed twice by
    racing threads is identical, so writes only need the lock to keep the
    dicts consistent.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.r = spec.r
        self.p = spec.p
        self._lock = threading.RLock()
        self._brackets: Dict[int, Poly] = {}
        self._big_d: Dict[int, Poly] = {0: Poly.one(spec)}
        self._big_l: Dict[int, Poly] = {0: Poly.one(spec)}
        self._factorials: Dict[int, Poly] = {}
        self._memo: Dict[Hashable, object] = {}

    @classmethod
    def for_order(cls, r: int, modulus: Optional[Sequence[int]] = None) -> "CarlitzContext":
        return cls(FieldSpec.of_order(r, modulus))

    def __repr__(self) -> str:
        return f"CarlitzContext({self.spec})"

    def _store(self, table: Dict, key, value):
        with self._lock:
            return table.setdefault(key, value)

    def memo(self, key: Hashable, compute: Callable[[], V]) -> V:
        """Generic per-context cache for derived data (series powers and such)"""
        value = self._memo.get(key)
        if value is None:
            value = self._store(self._memo, key, compute())
        return value

    def replace_memo(self, key: Hashable, value: V) -> V:
        with self._lock:
            self._memo[key] = value
        return value

    def clear_memo(self) -> int:
        """Drop the derived data; D_i, L_i and the factorials stay. Returns the count dropped"""
        with self._lock:
            dropped = len(self._memo)
            self._memo.clear()
        if dropped:
            logger.debug(f"Cleared {dropped} memo entries over {self.spec}")
        return dropped

    def bracket(self, i: int) -> Poly:
        """[i] = T^(r^i) - T for i >= 1"""
        if i < 1:
            raise ValueError(f"bracket index must be >= 1, got {i}")
        cached = self._brackets.get(i)
        if cached is not None:
            return cached
        degree = check_dense_degree(checked_pow(self.r, i, f"deg [{i}]"), f"deg [{i}]")
        value = Poly.monomial(self.spec, degree) - Poly.variable(self.spec)
        return self._store(self._brackets, i, value)

    def big_d(self, i: int) -> Poly:
        if i < 0:
            raise ValueError(f"D_i needs i >= 0, got {i}")
        cached = self._big_d.get(i)
        if cached is not None:
            return cached
        check_dense_degree(checked_mul(i, checked_pow(self.r, i), f"deg D_{i}"), f"deg D_{i}")
        start = max(j for j in list(self._big_d) if j < i)
        value = self._big_d[start]
        for j in range(start + 1, i + 1):
            value = self._store(self._big_d, j, self.bracket(j) * value.frobenius())
        logger.debug(f"Computed D_{i} over {self.spec}", degree=value.degree)
        return value

    def big_l(self, i: int) -> Poly:
        if i < 0:
            raise ValueError(f"L_i needs i >= 0, got {i}")
        cached = self._big_l.get(i)
        if cached is not None:
            return cached
        start = max(j for j in list(self._big_l) if j < i)
        value = self._big_l[start]
        for j in range(start + 1, i + 1):
            value = self._store(self._big_l, j, self.bracket(j) * value)
        return value

    def carlitz_factorial(self, n: int) -> Poly:
        """Pi(n) = prod D_j^(c_j) over the r-ary digits c_j of n"""
        if n < 0:
            raise ValueError(f"Carlitz factorial needs n >= 0, got {n}")
        cached = self._factorials.get(n)
        if cached is not None:
            return cached
        value = Poly.one(self.spec)
        for j, c in enumerate(r_digits(self.r, n)):
            if c:
                value = value * self.big_d(j) ** c
        return self._store(self._factorials, n, value)

    # RatFunc views used throughout the formulas

    def d_frac(self, i: int) -> RatFunc:
        return RatFunc(self.big_d(i))

    def l_frac(self, i: int) -> RatFunc:
        return RatFunc(self.big_l(i))

    def factorial_frac(self, n: int) -> RatFunc:
        return RatFunc(self.carlitz_factorial(n))

    def sign(self, exponent: int) -> RatFunc:
        """(-1)^exponent in F_r"""
        return RatFunc.from_int(self.spec, -1 if exponent % 2 else 1)


def bracket(ctx: CarlitzContext, i: int) -> Poly:
    return ctx.bracket(i)


def big_d(ctx: CarlitzContext, i: int) -> Poly:
    return ctx.big_d(i)


def big_l(ctx: CarlitzContext, i: int) -> Poly:
    return ctx.big_l(i)


def carlitz_factorial(ctx: CarlitzContext, n: int) -> Poly:
    return ctx.carlitz_factorial(n)
