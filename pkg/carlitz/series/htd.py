# carlitz/series/htd.py
"""Hasse-Teichmueller derivatives on truncated series.

H^(n) maps x^m to C(m, n) x^(m - n), with the binomial reduced mod p. The
product and quotient rules are evaluated literally over ordered
compositions; they are exponential in n and meant for checks at small n.
"""

from functools import reduce
from typing import Dict, Iterator, List, Sequence, Tuple

from core.algebra import RatFunc
from core.exceptions import NonUnitSeriesError, TruncationError

from ..arith import binom_mod_p
from .sparse import SparseSeries


def ordered_compositions(total: int, parts: int, min_part: int = 0) -> Iterator[Tuple[int, ...]]:
    """Tuples of `parts` integers >= min_part summing to total"""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min_part, total - min_part * (parts - 1) + 1):
        for rest in ordered_compositions(total - first, parts - 1, min_part):
            yield (first,) + rest


def ht_derive(f: SparseSeries, n: int) -> SparseSeries:
    if n < 0:
        raise ValueError(f"derivative order must be >= 0, got {n}")
    if n > f.order:
        raise TruncationError(f"H^({n}) of a series known only through x^{f.order}")
    if n == 0:
        return f
    p = f.spec.p
    terms: Dict[int, RatFunc] = {}
    for m, coef in f.items():
        if m < n:
            continue
        c = binom_mod_p(m, n, p)
        if c:
            terms[m - n] = coef if c == 1 else coef * c
    return SparseSeries(f.spec, terms, f.order - n)


def ht_at_zero(f: SparseSeries, n: int) -> RatFunc:
    """H^(n)(f) evaluated at x = 0, i.e. the coefficient of x^n"""
    return f.coefficient(n)


def _product(series: Sequence[SparseSeries], order: int) -> SparseSeries:
    return reduce(lambda acc, s: acc * s, series[1:], series[0].truncate(order))


def ht_product_rule(fs: List[SparseSeries], n: int) -> SparseSeries:
    """Sum over i_1 + ... + i_k = n of prod_j H^(i_j)(f_j)"""
    if len(fs) < 2:
        raise ValueError("the product rule needs at least two factors")
    order = min(f.order for f in fs) - n
    if order < 0:
        raise TruncationError(f"H^({n}) of series known only through x^{order + n}")
    derivatives = [[ht_derive(f, i).truncate(order) for i in range(n + 1)] for f in fs]
    total = SparseSeries.zero(fs[0].spec, order)
    for indices in ordered_compositions(n, len(fs)):
        total = total + _product([derivatives[j][i] for j, i in enumerate(indices)], order)
    return total


def _quotient_terms(n: int, variant: int, p: int) -> Iterator[Tuple[int, int, int]]:
    """(k, min_part, integer factor) for each k-term of the chosen quotient rule"""
    if variant not in (1, 2):
        raise ValueError(f"quotient rule variant must be 1 or 2, got {variant}")
    for k in range(1, n + 1):
        sign = -1 if k % 2 else 1
        if variant == 1:
            yield k, 1, sign
        else:
            c = binom_mod_p(n + 1, k + 1, p)
            if c:
                yield k, 0, sign * c


def ht_quotient_rule(f: SparseSeries, n: int, variant: int = 1) -> SparseSeries:
    """H^(n)(1/f) as sum_k factor_k / f^(k+1) * sum prod_j H^(i_j)(f)"""
    if n < 1:
        raise ValueError(f"quotient rule needs n >= 1, got {n}")
    if f.constant_term.is_zero:
        raise NonUnitSeriesError("quotient rule needs a unit constant term")
    order = f.order - n
    if order < 0:
        raise TruncationError(f"H^({n}) of a series known only through x^{f.order}")
    spec = f.spec
    inverse = f.truncate(order).inverse()
    derivatives = [ht_derive(f, i).truncate(order) for i in range(n + 1)]
    total = SparseSeries.zero(spec, order)
    for k, min_part, factor in _quotient_terms(n, variant, spec.p):
        inner = SparseSeries.zero(spec, order)
        for indices in ordered_compositions(n, k, min_part):
            inner = inner + _product([derivatives[i] for i in indices], order)
        if not inner.is_zero:
            total = total + (inner * inverse.power(k + 1)).scale(factor)
    return total


def _support_sequences(
    support: Sequence[int], total: int, length: int
) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of `length` exponents from the sorted support summing to total"""
    if length == 0:
        if total == 0:
            yield ()
        return
    if support and support[0] * length > total:
        return
    for exp in support:
        if exp > total:
            break
        for rest in _support_sequences(support, total - exp, length - 1):
            yield (exp,) + rest


def ht_quotient_rule_at_zero(f: SparseSeries, n: int, variant: int = 1) -> RatFunc:
    """H^(n)(1/f) at x = 0 from the quotient rule.

    At x = 0 each H^(i)(f) is the coefficient of x^i, so only compositions
    whose parts lie in the support of f contribute.
    """
    if n < 1:
        raise ValueError(f"quotient rule needs n >= 1, got {n}")
    f0 = f.constant_term
    if f0.is_zero:
        raise NonUnitSeriesError("quotient rule needs a unit constant term")
    if n > f.order:
        raise TruncationError(f"H^({n}) of a series known only through x^{f.order}")
    spec = f.spec
    f0_inv = f0.inverse()
    total = RatFunc.zero(spec)
    for k, min_part, factor in _quotient_terms(n, variant, spec.p):
        support = [exp for exp in f.exponents if min_part <= exp <= n]
        inner = RatFunc.zero(spec)
        for parts in _support_sequences(support, n, k):
            product = RatFunc.one(spec)
            for exp in parts:
                product = product * f.coefficient(exp)
            inner = inner + product
        if not inner.is_zero:
            total = total + inner * f0_inv ** (k + 1) * factor
    return total
