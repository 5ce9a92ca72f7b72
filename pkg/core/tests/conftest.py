# core/tests/conftest.py
import pytest
from hypothesis import strategies as st

from core.algebra import FieldSpec, Poly, RatFunc

FIELD_ORDERS = [2, 3, 4, 5, 9]


def polys(spec: FieldSpec, max_degree: int = 8):
    """Strategy for polynomials over spec of degree at most max_degree"""
    return st.lists(st.integers(0, spec.r - 1), max_size=max_degree + 1).map(
        lambda codes: Poly(spec, codes)
    )


def nonzero_polys(spec: FieldSpec, max_degree: int = 6):
    return polys(spec, max_degree).filter(lambda f: not f.is_zero)


def ratfuncs(spec: FieldSpec, max_degree: int = 4):
    return st.builds(RatFunc, polys(spec, max_degree), nonzero_polys(spec, max_degree))


@pytest.fixture
def f3():
    """The prime field F_3"""
    return FieldSpec.of_order(3)


@pytest.fixture
def f4():
    """F_4 = F_2[u]/(u^2 + u + 1)"""
    return FieldSpec.of_order(4)


@pytest.fixture
def f9():
    """F_9 = F_3[u]/(u^2 + 1)"""
    return FieldSpec.of_order(9)
