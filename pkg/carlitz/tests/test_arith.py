# carlitz/tests/test_arith.py
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from carlitz.arith import (
    MAX_DENSE_DEGREE,
    binom_mod_p,
    check_dense_degree,
    checked_add,
    checked_mul,
    checked_pow,
    composition_target_bound,
    multinomial,
    multinomial_mod_p,
    part_counts,
    powers_of,
    r_digits,
)
from core.exceptions import ExponentOverflowError


def test_checked_pow_limits():
    assert checked_pow(3, 39) == 3**39
    assert checked_pow(1, 10_000) == 1
    with pytest.raises(ExponentOverflowError):
        checked_pow(3, 40)
    with pytest.raises(ExponentOverflowError):
        checked_pow(2, 70)
    with pytest.raises(ValueError):
        checked_pow(2, -1)


def test_checked_add_and_mul():
    assert checked_add(2**62, 2**62 - 1) == 2**63 - 1
    with pytest.raises(ExponentOverflowError):
        checked_add(2**62, 2**62)
    with pytest.raises(ExponentOverflowError):
        checked_mul(2**32, 2**32)


def test_composition_target_bound():
    assert composition_target_bound(3, 2, 18) == 18 + 18 * 9
    with pytest.raises(ExponentOverflowError):
        composition_target_bound(3, 39, 10)


def test_dense_degree_limit():
    assert check_dense_degree(MAX_DENSE_DEGREE) == MAX_DENSE_DEGREE
    with pytest.raises(ExponentOverflowError):
        check_dense_degree(MAX_DENSE_DEGREE + 1)


def test_powers_of():
    assert list(powers_of(3, 0, 30)) == [(0, 1), (1, 3), (2, 9), (3, 27)]
    assert list(powers_of(2, 2, 3)) == []


def test_r_digits():
    digits = r_digits(3, 18 + 9 * 5)
    assert digits.digits == (0, 0, 1, 2)
    assert digits.support() == (2, 3)
    assert digits.value == 63
    assert r_digits(3, 0).digits == ()
    with pytest.raises(ValueError):
        r_digits(1, 5)
    with pytest.raises(ValueError):
        r_digits(3, -1)


@given(st.integers(2, 16), st.integers(0, 10**9))
def test_r_digits_round_trip(r, n):
    digits = r_digits(r, n)
    assert digits.value == n
    assert all(0 <= c < r for c in digits)
    if n:
        assert digits[len(digits) - 1] != 0


@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 300), st.integers(-2, 300))
def test_lucas_matches_exact_binomial(p, m, k):
    expected = math.comb(m, k) % p if 0 <= k <= m else 0
    assert binom_mod_p(m, k, p) == expected


def test_multinomials():
    assert part_counts((1, 1, 2)) == (2, 1)
    assert multinomial((2, 1)) == 3
    assert multinomial((3, 3)) == 20
    # 20 = 2 mod 3
    assert multinomial_mod_p((3, 3), 3) == 2
    assert multinomial_mod_p((1, 1), 2) == 0


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4), st.sampled_from([2, 3, 5]))
def test_multinomial_mod_p_matches_exact(counts, p):
    assert multinomial_mod_p(counts, p) == multinomial(counts) % p
