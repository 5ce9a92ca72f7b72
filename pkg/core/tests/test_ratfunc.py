# core/tests/test_ratfunc.py
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from core.algebra import (
    FieldSpec,
    Poly,
    RatFunc,
    format_ratfunc,
    parse_ratfunc,
    poly_gcd,
    rf_arith,
)
from core.exceptions import FieldDivisionError, FieldMismatchError, ParseError
from core.tests.conftest import ratfuncs

RATFUNC_ORDERS = [2, 3, 4, 9]


def test_reduced_to_lowest_terms(f3):
    """2T / 2T^2 reduces to 1/T"""
    value = RatFunc(Poly(f3, [0, 2]), Poly(f3, [0, 0, 2]))
    assert value.num == Poly.one(f3)
    assert value.den == Poly.variable(f3)
    assert str(value) == "(1)/(T)"


def test_denominator_is_monic(f3):
    # 1 / 2T = 2 / T
    value = RatFunc(Poly.one(f3), Poly(f3, [0, 2]))
    assert value.num == Poly.constant(f3, 2)
    assert value.den.is_monic


def test_zero_has_unit_denominator(f3):
    value = RatFunc(Poly.zero(f3), Poly(f3, [1, 1]))
    assert value == RatFunc.zero(f3)
    assert value.den.is_one
    assert str(value) == "0"


def test_zero_denominator_raises(f3):
    with pytest.raises(FieldDivisionError):
        RatFunc(Poly.one(f3), Poly.zero(f3))
    with pytest.raises(ZeroDivisionError):
        RatFunc.zero(f3).inverse()


def test_integer_operands(f3):
    t = RatFunc(Poly.variable(f3))
    assert t + 1 == 1 + t
    assert 2 * t == t * 2
    assert t - t == 0
    assert RatFunc.one(f3) == 1
    assert RatFunc.from_int(f3, 4) == 1
    assert (1 / t) * t == 1


def test_polynomial_values(f3):
    t = RatFunc(Poly.variable(f3))
    assert (t * t).is_polynomial
    assert not (1 / t).is_polynomial
    assert str(t * t + 2) == "T^2 + 2"


def test_negative_powers(f3):
    x = RatFunc(Poly(f3, [1, 1]), Poly(f3, [0, 0, 1]))
    assert x**-2 == (x**2).inverse()
    assert x**0 == 1


def test_rf_arith_dispatch(f3):
    a = RatFunc(Poly.variable(f3))
    b = RatFunc(Poly(f3, [1, 1]))
    assert rf_arith(a, b, "add") == RatFunc(Poly(f3, [1, 2]))
    assert rf_arith(a, b, "div") == RatFunc(Poly(f3, [0, 1]), Poly(f3, [1, 1]))
    with pytest.raises(ValueError):
        rf_arith(a, b, "mod")
    with pytest.raises(FieldMismatchError):
        a + RatFunc.one(FieldSpec.of_order(5))


def test_sum(f3):
    t = RatFunc(Poly.variable(f3))
    total = RatFunc.sum((t**-k for k in range(1, 4)), f3)
    assert total == (t * t + t + 1) / (t**3)
    assert RatFunc.sum([], f3) == 0


def test_text_forms(f9):
    value = parse_ratfunc(f9, "((0,1)*T + (1,0))/(T^2 + (2,0))")
    assert value.den == Poly.parse(f9, "T^2 + 2")
    assert parse_ratfunc(f9, format_ratfunc(value)) == value


@pytest.mark.parametrize("text", ["(1)/(T)/(T)", "1/0", "(1)/", "/T"], ids=repr)
def test_malformed_text_rejected(f3, text):
    with pytest.raises((ParseError, FieldDivisionError)):
        RatFunc.parse(f3, text)


@pytest.mark.parametrize("r", RATFUNC_ORDERS)
@given(data=st.data())
def test_field_laws(r, data):
    spec = FieldSpec.of_order(r)
    a, b, c = (data.draw(ratfuncs(spec)) for _ in range(3))
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    assume(not b.is_zero)
    assert (a / b) * b == a
    assert b * b.inverse() == 1


@pytest.mark.parametrize("r", RATFUNC_ORDERS)
@given(data=st.data())
def test_canonical_form(r, data):
    spec = FieldSpec.of_order(r)
    value = data.draw(ratfuncs(spec))
    assert value.den.is_monic
    if not value.is_zero:
        assert poly_gcd(value.num, value.den).is_one
    assert value.canonical() == value
    assert hash(value.canonical()) == hash(value)


@pytest.mark.parametrize("r", RATFUNC_ORDERS)
@given(data=st.data())
def test_text_round_trip(r, data):
    spec = FieldSpec.of_order(r)
    value = data.draw(ratfuncs(spec))
    assert RatFunc.parse(spec, str(value)) == value
