# core/tests/test_field.py
import itertools

import pytest

from core.algebra import FieldSpec, ff_arith
from core.algebra.field import DEFAULT_MODULI, MAX_TABLE_ORDER, is_irreducible
from core.exceptions import FieldDivisionError, FieldMismatchError, InvalidFieldError
from core.tests.conftest import FIELD_ORDERS


@pytest.mark.parametrize("r", FIELD_ORDERS)
def test_field_axioms_hold_exhaustively(r):
    """Every triple of elements satisfies the field axioms"""
    spec = FieldSpec.of_order(r)
    elements = spec.elements()
    zero, one = spec.element(0), spec.element(1)

    for a in elements:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if not a.is_zero:
            assert a * a.inverse() == one

    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert (a - b) + b == a

    for a, b, c in itertools.product(elements, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("r", FIELD_ORDERS)
def test_frobenius_fixes_every_element(r):
    spec = FieldSpec.of_order(r)
    for a in spec.elements():
        assert a**r == a


def test_f4_multiplication(f4):
    """u * u = u + 1 and u * (u + 1) = 1 under u^2 + u + 1"""
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1
    assert f4.inverse(2) == 3
    assert str(f4.element(2)) == "(0,1)"


def test_f9_coordinates(f9):
    u = f9.element((0, 1))
    assert u.code == 3
    assert u * u == f9.element(2)
    assert str(u) == "(0,1)"
    assert f9.rep_of(7) == (1, 2)


def test_integers_map_into_prime_subfield(f3):
    two = f3.element(2)
    assert two + 1 == f3.element(0)
    assert 1 - two == f3.element(2)
    assert two * 5 == f3.element(1)


def test_ff_arith_dispatch(f3):
    a, b = f3.element(2), f3.element(2)
    assert ff_arith(a, b, "add") == f3.element(1)
    assert ff_arith(a, b, "sub") == f3.element(0)
    assert ff_arith(a, b, "mul") == f3.element(1)
    assert ff_arith(a, b, "div") == f3.element(1)
    with pytest.raises(ValueError):
        ff_arith(a, b, "pow")


def test_division_by_zero_raises(f3):
    with pytest.raises(FieldDivisionError):
        f3.element(1) / f3.element(0)
    with pytest.raises(ZeroDivisionError):
        f3.element(0).inverse()


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatchError):
        FieldSpec.of_order(3).element(1) + FieldSpec.of_order(5).element(1)


@pytest.mark.parametrize(
    "build",
    [
        lambda: FieldSpec(4),
        lambda: FieldSpec.of_order(6),
        lambda: FieldSpec.of_order(1),
        lambda: FieldSpec(2, 2, (1, 0, 1)),
        lambda: FieldSpec(2, 2, (1, 1, 2)),
        lambda: FieldSpec(3, 2, (1, 0, 0, 1)),
        lambda: FieldSpec.of_order(49),
        lambda: FieldSpec(2, 11),
        lambda: FieldSpec(3, 0),
    ],
    ids=[
        "composite-p",
        "not-prime-power",
        "one",
        "reducible-modulus",
        "bad-coefficient",
        "wrong-degree",
        "no-default-modulus",
        "too-large",
        "zero-degree",
    ],
)
def test_invalid_fields_rejected(build):
    with pytest.raises(InvalidFieldError):
        build()


def test_default_moduli_are_irreducible():
    for r, (p, modulus) in DEFAULT_MODULI.items():
        assert p ** (len(modulus) - 1) == r
        assert is_irreducible(modulus, p)


def test_custom_modulus_accepted():
    """u^2 + u + 2 is another irreducible quadratic over F_3"""
    spec = FieldSpec.of_order(9, modulus=(2, 1, 1))
    assert spec.modulus == (2, 1, 1)
    assert spec != FieldSpec.of_order(9)
    for a in spec.elements():
        if not a.is_zero:
            assert a * a.inverse() == spec.element(1)


def test_largest_supported_extension():
    spec = FieldSpec(2, 10, (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1))
    assert spec.r == MAX_TABLE_ORDER
    assert str(spec) == "F_1024"


def test_codes_checked(f4):
    with pytest.raises(InvalidFieldError):
        f4.element(4)
    with pytest.raises(InvalidFieldError):
        f4.element((1, 2))
