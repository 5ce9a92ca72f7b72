# carlitz/compositions.py
"""Solutions of r^(N+i_1) + ... + r^(N+i_k) = n + k r^N.

Solutions are enumerated as nondecreasing tuples; every weight the formulas
use is symmetric in the tuple, so each multiset stands for all its
arrangements through its multiplicity.
"""

from dataclasses import dataclass
from typing import Callable, Iterator, List, Tuple

from core.algebra import FieldSpec, Poly, RatFunc
from core.algebra.field import smallest_prime_factor

from .arith import (
    checked_add,
    checked_mul,
    checked_pow,
    multinomial,
    multinomial_mod_p,
    part_counts,
)
from .context import CarlitzContext


@dataclass(frozen=True)
class PowerComposition:
    """A nondecreasing solution (i_1 <= ... <= i_k) and its number of arrangements"""

    parts: Tuple[int, ...]
    multiplicity: int
    multiplicity_mod_p: int

    @property
    def k(self) -> int:
        return len(self.parts)

    def total(self, r: int, N: int) -> int:
        return sum(r ** (N + i) for i in self.parts)


def composition_target(r: int, N: int, n: int, k: int) -> int:
    """n + k r^N with overflow checks"""
    return checked_add(n, checked_mul(k, checked_pow(r, N, "r^N"), "k r^N"), "n + k r^N")


def _descend(
    r: int, N: int, remaining: int, slots: int, lowest: int
) -> Iterator[Tuple[int, ...]]:
    if slots == 0:
        if remaining == 0:
            yield ()
        return
    unit = r ** (N + lowest)
    # every remaining part is a multiple of r^(N+lowest)
    if remaining % unit or unit * slots > remaining:
        return
    i, value = lowest, unit
    while value * slots <= remaining:
        for rest in _descend(r, N, remaining - value, slots - 1, i):
            yield (i,) + rest
        i += 1
        value *= r


def enumerate_power_compositions(
    r: int, N: int, n: int, k: int, min_part: int = 1
) -> List[PowerComposition]:
    """All nondecreasing (i_1, ..., i_k), i_j >= min_part, with sum r^(N+i_j) = n + k r^N"""
    if min_part not in (0, 1):
        raise ValueError(f"min_part must be 0 or 1, got {min_part}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n < 0 or N < 0:
        raise ValueError(f"need n, N >= 0, got n={n}, N={N}")
    target = composition_target(r, N, n, k)
    p = smallest_prime_factor(r)
    result = []
    for parts in _descend(r, N, target, k, min_part):
        counts = part_counts(parts)
        result.append(
            PowerComposition(
                parts=parts,
                multiplicity=multinomial(counts),
                multiplicity_mod_p=multinomial_mod_p(counts, p),
            )
        )
    return result


def max_nonempty_k(r: int, N: int, n: int, min_part: int) -> int:
    """Largest k that can have solutions.

    Each part is at least r^(N+min_part), so k r^(N+min_part) <= n + k r^N.
    With min_part = 0 that bound is vacuous and k runs up to n.
    """
    if min_part == 0:
        return n
    return min(n, n // (checked_pow(r, N) * (r - 1)))


def iterate_compositions(
    r: int, N: int, n: int, min_part: int
) -> Iterator[Tuple[int, List[PowerComposition]]]:
    """(k, S_k) for k = 1, 2, ... with the size-based early exit"""
    for k in range(1, max_nonempty_k(r, N, n, min_part) + 1):
        yield k, enumerate_power_compositions(r, N, n, k, min_part)


def d_weight(ctx: CarlitzContext, N: int, parts: Tuple[int, ...]) -> RatFunc:
    """1/(D_(N+i_1) ... D_(N+i_k))"""
    den = Poly.one(ctx.spec)
    for i in parts:
        den = den * ctx.big_d(N + i)
    return RatFunc(Poly.one(ctx.spec), den)


def l_weight(ctx: CarlitzContext, N: int, parts: Tuple[int, ...]) -> RatFunc:
    """(-1)^(i_1 + ... + i_k)/(L_(N+i_1) ... L_(N+i_k))"""
    den = Poly.one(ctx.spec)
    for i in parts:
        den = den * ctx.big_l(N + i)
    return ctx.sign(sum(parts)) * RatFunc(Poly.one(ctx.spec), den)


def composition_sum(
    spec: FieldSpec,
    compositions: List[PowerComposition],
    weight: Callable[[Tuple[int, ...]], RatFunc],
) -> RatFunc:
    """Sum over ordered tuples of weight(tuple), folded over multisets"""
    total = RatFunc.zero(spec)
    for composition in compositions:
        if composition.multiplicity_mod_p:
            total = total + weight(composition.parts) * composition.multiplicity_mod_p
    return total
