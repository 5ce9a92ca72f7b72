# carlitz/series/carlitz.py
from enum import Enum

from core.algebra import RatFunc

from ..arith import checked_add, checked_pow, checked_sub, powers_of
from ..context import CarlitzContext
from .sparse import SparseSeries


class SeriesKind(Enum):
    """Which Carlitz series a construction is built from"""

    EXP = "exp"
    LOG = "log"

    def __str__(self):
        return self.value


def _term(ctx: CarlitzContext, kind: SeriesKind, i: int) -> RatFunc:
    """Coefficient of x^(r^i): 1/D_i or (-1)^i/L_i"""
    if kind is SeriesKind.EXP:
        return ctx.d_frac(i).inverse()
    return ctx.sign(i) * ctx.l_frac(i).inverse()


def carlitz_series(
    ctx: CarlitzContext, kind: SeriesKind, order: int, first: int = 0, last: int = None
) -> SparseSeries:
    """Sum of the x^(r^i) terms for first <= i <= last with r^i <= order"""
    terms = {}
    for i, power in powers_of(ctx.r, first, order):
        if last is not None and i > last:
            break
        terms[power] = _term(ctx, kind, i)
    return SparseSeries(ctx.spec, terms, order)


def carlitz_exp(ctx: CarlitzContext, order: int) -> SparseSeries:
    """e_C(x) = sum x^(r^i)/D_i"""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return carlitz_series(ctx, SeriesKind.EXP, order)


def carlitz_log(ctx: CarlitzContext, order: int) -> SparseSeries:
    """log_C(x) = sum (-1)^i x^(r^i)/L_i"""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return carlitz_series(ctx, SeriesKind.LOG, order)


def _check_partial_index(m: int) -> None:
    if m < -1:
        raise ValueError(f"partial sum index must be >= -1, got {m}")


def partial_sum_exp(ctx: CarlitzContext, m: int, order: int) -> SparseSeries:
    """E_m(x), the terms i <= m of e_C; E_{-1} = 0"""
    _check_partial_index(m)
    return carlitz_series(ctx, SeriesKind.EXP, order, last=m)


def partial_sum_log(ctx: CarlitzContext, m: int, order: int) -> SparseSeries:
    """F_m(x), the terms i <= m of log_C; F_{-1} = 0"""
    _check_partial_index(m)
    return carlitz_series(ctx, SeriesKind.LOG, order, last=m)


def tail_series(ctx: CarlitzContext, kind: SeriesKind, m: int, order: int) -> SparseSeries:
    """e_C - E_{m-1} (or log_C - F_{m-1}): the terms i >= m"""
    if m < 0:
        raise ValueError(f"tail index must be >= 0, got {m}")
    return carlitz_series(ctx, kind, order, first=m)


def tail_quotient(kind: SeriesKind, ctx: CarlitzContext, N: int, order: int) -> SparseSeries:
    """Tail from index N divided by its leading term x^(r^N)/D_N (or its log analogue).

    The result has constant term 1, support {r^(N+j) - r^N} and coefficients
    D_N/D_(N+j), respectively (-1)^j L_N/L_(N+j).
    """
    if N < 0:
        raise ValueError(f"N must be >= 0, got {N}")
    kind = SeriesKind(kind)
    base = checked_pow(ctx.r, N, "r^N")
    terms = {}
    for i, power in powers_of(ctx.r, N, checked_add(base, order, "r^N + order")):
        j = i - N
        exp = checked_sub(power, base, "tail exponent")
        if kind is SeriesKind.EXP:
            terms[exp] = RatFunc(ctx.big_d(N), ctx.big_d(i))
        else:
            terms[exp] = ctx.sign(j) * RatFunc(ctx.big_l(N), ctx.big_l(i))
    return SparseSeries(ctx.spec, terms, order)
