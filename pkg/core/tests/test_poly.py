# core/tests/test_poly.py
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.algebra import FieldSpec, Poly, poly_arith, poly_gcd
from core.algebra.poly import KARATSUBA_THRESHOLD, _karatsuba, _plain_convolve, _trim
from core.exceptions import FieldDivisionError, FieldMismatchError, ParseError
from core.tests.conftest import nonzero_polys, polys

RING_ORDERS = [2, 3, 4, 9]


def test_canonical_text(f3):
    f = Poly(f3, [0, 2, 0, 1])
    assert str(f) == "T^3 + 2*T"
    assert Poly.parse(f3, "T^3 + 2*T") == f
    assert str(Poly.zero(f3)) == "0"
    assert str(Poly.one(f3)) == "1"


def test_trailing_zeros_are_trimmed(f3):
    f = Poly(f3, [1, 0, 0])
    assert f.degree == 0
    assert f == Poly.one(f3)
    assert Poly.zero(f3).degree == -1
    assert Poly.zero(f3).is_zero


def test_indexing_past_degree_is_zero(f3):
    f = Poly(f3, [2, 1])
    assert f[0] == f3.element(2)
    assert f[5].is_zero


def test_extension_coefficients(f4):
    """(T + u)(T + u + 1) = T^2 + T + 1 over F_4"""
    product = Poly(f4, [2, 1]) * Poly(f4, [3, 1])
    assert product == Poly(f4, [1, 1, 1])
    assert str(Poly(f4, [3, 2])) == "(0,1)*T + (1,1)"
    assert Poly.parse(f4, "(0,1)*T + (1,1)") == Poly(f4, [3, 2])


def test_gcd_is_monic(f3):
    # T^2 - 1 = (T - 1)(T + 1)
    assert poly_gcd(Poly(f3, [2, 0, 1]), Poly(f3, [2, 1])) == Poly(f3, [2, 1])
    assert str(poly_gcd(Poly(f3, [2, 0, 1]), Poly(f3, [1, 2]))) == "T + 2"
    # T^2 + 1 is irreducible over F_3
    assert poly_gcd(Poly(f3, [1, 0, 1]), Poly(f3, [1, 1])).is_one
    assert poly_gcd(Poly(f3, [0, 2]), Poly.zero(f3)) == Poly(f3, [0, 1])


def test_gcd_of_zeros_raises(f3):
    with pytest.raises(FieldDivisionError):
        poly_gcd(Poly.zero(f3), Poly.zero(f3))


def test_division_by_zero_raises(f3):
    with pytest.raises(ZeroDivisionError):
        divmod(Poly.one(f3), Poly.zero(f3))


def test_exact_div(f3):
    f = Poly(f3, [2, 0, 1])
    assert f.exact_div(Poly(f3, [1, 1])) == Poly(f3, [2, 1])
    with pytest.raises(ArithmeticError):
        f.exact_div(Poly(f3, [0, 1]))


def test_poly_arith_dispatch(f3):
    f, g = Poly(f3, [1, 1]), Poly(f3, [2, 1])
    assert poly_arith(f, g, "add") == Poly(f3, [0, 2])
    assert poly_arith(f, g, "sub") == Poly(f3, [2])
    assert poly_arith(f, g, "mul") == Poly(f3, [2, 0, 1])
    with pytest.raises(ValueError):
        poly_arith(f, g, "div")
    with pytest.raises(FieldMismatchError):
        poly_arith(f, Poly(FieldSpec.of_order(5), [1]), "add")


def test_negative_power_rejected(f3):
    with pytest.raises(ValueError):
        Poly.variable(f3) ** -1


@pytest.mark.parametrize(
    "text", ["T^^2", "2**T", "T + ", "3*T", "(1,2)*T", "(0,1", "x"], ids=repr
)
def test_malformed_text_rejected(f3, text):
    with pytest.raises(ParseError):
        Poly.parse(f3, text)


def test_parse_collects_like_terms(f3):
    assert Poly.parse(f3, "T + 2*T + 1") == Poly.one(f3)
    assert Poly.parse(f3, " T ^ 2 + 1 ") == Poly(f3, [1, 0, 1])


@pytest.mark.parametrize("r", RING_ORDERS)
@given(data=st.data())
def test_ring_laws(r, data):
    spec = FieldSpec.of_order(r)
    f, g, h = (data.draw(polys(spec)) for _ in range(3))
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - g) + g == f
    assert f + (-f) == Poly.zero(spec)


@pytest.mark.parametrize("r", RING_ORDERS)
@given(data=st.data())
def test_division_identity(r, data):
    spec = FieldSpec.of_order(r)
    f = data.draw(polys(spec, max_degree=10))
    g = data.draw(nonzero_polys(spec))
    quot, rem = divmod(f, g)
    assert quot * g + rem == f
    assert rem.degree < g.degree


@pytest.mark.parametrize("r", RING_ORDERS)
@given(data=st.data())
def test_gcd_divides_both(r, data):
    spec = FieldSpec.of_order(r)
    f = data.draw(nonzero_polys(spec))
    g = data.draw(nonzero_polys(spec))
    d = poly_gcd(f, g)
    assert d.is_monic
    assert (f % d).is_zero
    assert (g % d).is_zero
    # the cofactors are coprime
    assert poly_gcd(f // d, g // d).is_one


@pytest.mark.parametrize("r", RING_ORDERS)
@given(data=st.data())
def test_frobenius_is_rth_power(r, data):
    spec = FieldSpec.of_order(r)
    f = data.draw(polys(spec, max_degree=4))
    assert f.frobenius() == f**r


@pytest.mark.parametrize("r", RING_ORDERS)
@given(data=st.data())
def test_text_round_trip(r, data):
    spec = FieldSpec.of_order(r)
    f = data.draw(polys(spec))
    assert Poly.parse(spec, str(f)) == f


@pytest.mark.parametrize("p", [2, 3, 7])
def test_karatsuba_matches_plain_convolution(p):
    """Products above the threshold agree with the schoolbook product"""
    rng = np.random.default_rng(p)
    a = rng.integers(0, p, size=3 * KARATSUBA_THRESHOLD + 17, dtype=np.int64)
    b = rng.integers(0, p, size=2 * KARATSUBA_THRESHOLD + 5, dtype=np.int64)
    assert np.array_equal(_trim(_karatsuba(a, b, p)), _trim(_plain_convolve(a, b, p)))

    spec = FieldSpec.of_order(p)
    product = Poly(spec, a) * Poly(spec, b)
    assert np.array_equal(product.coefficients, _trim(_plain_convolve(a, b, p)))


def test_coefficients_are_read_only(f3):
    f = Poly(f3, [1, 2])
    with pytest.raises(ValueError):
        f.coefficients[0] = 2
