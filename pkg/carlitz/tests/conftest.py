# carlitz/tests/conftest.py
import pytest
from hypothesis import strategies as st

from carlitz.context import CarlitzContext
from carlitz.series import SparseSeries
from core.algebra import FieldSpec, Poly, RatFunc
from core.tests.conftest import nonzero_polys, ratfuncs


def t_of(ctx: CarlitzContext) -> RatFunc:
    """The variable T as an element of K"""
    return RatFunc(Poly.variable(ctx.spec))


def unit_series(spec: FieldSpec, max_order: int = 12):
    """Strategy for series with an invertible constant term"""
    return st.integers(1, max_order).flatmap(
        lambda order: st.builds(
            lambda c0, rest: SparseSeries(spec, {0: c0, **rest}, order),
            nonzero_polys(spec, 2).map(RatFunc),
            st.dictionaries(st.integers(1, order), ratfuncs(spec, 2), max_size=4),
        )
    )


@pytest.fixture(scope="session")
def ctx2():
    """Carlitz context over F_2, shared so the memoized D_i and L_i are reused"""
    return CarlitzContext.for_order(2)


@pytest.fixture(scope="session")
def ctx3():
    """Carlitz context over F_3"""
    return CarlitzContext.for_order(3)


@pytest.fixture(scope="session")
def ctx4():
    """Carlitz context over F_4"""
    return CarlitzContext.for_order(4)
