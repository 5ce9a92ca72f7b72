# carlitz/tests/test_stirling.py
import math

import pytest

from carlitz.context import CarlitzContext
from carlitz.special import bc_series, cc_series
from carlitz.stirling import (
    COMPLETE,
    Flavor,
    FlavorType,
    StirlingKind,
    assoc1_via_compositions,
    assoc2_via_compositions,
    bc_untruncated,
    cc_untruncated,
    normalized_stirling,
    stirling1_c,
    stirling2_c,
    stirling_c,
    stirling_table,
)
from core.algebra import RatFunc


def test_flavors():
    assert Flavor.complete() == COMPLETE
    assert str(COMPLETE) == "complete"
    assert str(Flavor.associated(2)) == "associated(2)"
    assert str(Flavor.restricted(0)) == "restricted(0)"
    assert Flavor.associated(2).first_index == 2
    assert Flavor.restricted(3).last_index == 3
    assert COMPLETE.last_index is None
    with pytest.raises(ValueError):
        Flavor(FlavorType.COMPLETE, 1)
    with pytest.raises(ValueError):
        Flavor.associated(-1)
    with pytest.raises(ValueError):
        Flavor(FlavorType.RESTRICTED)


@pytest.mark.parametrize("kind", list(StirlingKind))
def test_boundaries(ctx3, kind):
    for n in range(0, 30):
        assert stirling_c(ctx3, kind, n, n) == 1
        if n:
            assert stirling_c(ctx3, kind, n, 0).is_zero
            assert stirling_c(ctx3, kind, n - 1, n).is_zero


def test_first_column(ctx3):
    """{r^i, 1}_C = 1 and the column vanishes off the powers of r"""
    for n in range(1, 30):
        expected = 1 if n in (1, 3, 9, 27) else 0
        assert stirling2_c(ctx3, n, 1) == expected


def test_first_column_first_kind(ctx3):
    """[r^i, 1]_C = (-1)^i D_i / L_i"""
    for i in range(4):
        expected = ctx3.sign(i) * ctx3.d_frac(i) / ctx3.l_frac(i)
        assert stirling1_c(ctx3, 3**i, 1) == expected


def test_negative_indices_rejected(ctx3):
    with pytest.raises(ValueError):
        normalized_stirling(ctx3, StirlingKind.SECOND, -1, 1)


@pytest.mark.parametrize("k", range(1, 19))
def test_second_kind_associated_worked_example(ctx3, k):
    """Pi(k)/Pi(18 + 9k) {18 + 9k, k}_(C, >= 2) = k/(D_2^(k-1) D_3)"""
    d2, d3 = ctx3.d_frac(2), ctx3.d_frac(3)
    actual = normalized_stirling(ctx3, StirlingKind.SECOND, 18 + 9 * k, k, Flavor.associated(2))
    assert actual == k * (d2 ** (k - 1) * d3).inverse()


@pytest.mark.parametrize("k", range(1, 8))
def test_first_kind_associated_worked_example(ctx3, k):
    """Pi(k)/Pi(270 + 27k) [270 + 27k, k]_(C, >= 3) has a five-fold and a mixed term"""
    l3, l4, l5 = ctx3.l_frac(3), ctx3.l_frac(4), ctx3.l_frac(5)
    expected = RatFunc.zero(ctx3.spec)
    if k >= 5:
        expected = expected + math.comb(k, 5) * (l3 ** (k - 5) * l4**5).inverse()
    if k >= 2:
        expected = expected + k * (k - 1) * (l3 ** (k - 2) * l4 * l5).inverse()
    expected = ctx3.sign(k - 1) * expected
    actual = normalized_stirling(ctx3, StirlingKind.FIRST, 270 + 27 * k, k, Flavor.associated(3))
    assert actual == expected


def test_fifth_power_value(ctx3):
    """At k = 5 the value is 1/L_4^5 + 2/(L_3^3 L_4 L_5)"""
    l3, l4, l5 = ctx3.l_frac(3), ctx3.l_frac(4), ctx3.l_frac(5)
    actual = normalized_stirling(ctx3, StirlingKind.FIRST, 270 + 27 * 5, 5, Flavor.associated(3))
    assert actual == (l4**5).inverse() + 2 * (l3**3 * l4 * l5).inverse()


def test_associated_worked_values(ctx3):
    d2, d3 = ctx3.d_frac(2), ctx3.d_frac(3)
    assert assoc2_via_compositions(ctx3, 2, 18, 1) == d3.inverse()
    assert assoc2_via_compositions(ctx3, 2, 18, 2) == 2 * (d2 * d3).inverse()
    l4, l5 = ctx3.l_frac(4), ctx3.l_frac(5)
    assert assoc1_via_compositions(ctx3, 3, 270, 2) == -2 * (l4 * l5).inverse()
    assert stirling2_c(ctx3, 27, 1, Flavor.associated(2)) == ctx3.factorial_frac(27) / d3


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("N", [0, 1, 2])
def test_composition_identities(r, N):
    """The associated numbers agree with their composition sums"""
    ctx = CarlitzContext.for_order(r)
    flavor = Flavor.associated(N)
    for n in range(1, 25):
        for k in range(1, 4):
            target = n + k * r**N
            assert normalized_stirling(
                ctx, StirlingKind.SECOND, target, k, flavor
            ) == assoc2_via_compositions(ctx, N, n, k)
            assert normalized_stirling(
                ctx, StirlingKind.FIRST, target, k, flavor
            ) == assoc1_via_compositions(ctx, N, n, k)


@pytest.mark.parametrize("kind", list(StirlingKind))
def test_flavor_degeneration(ctx3, kind):
    """associated(0) is the complete flavor, as is restricted(m) once r^m >= n"""
    for n in range(1, 30):
        m = 0
        while 3**m < n:
            m += 1
        for k in range(1, min(n, 5) + 1):
            complete = normalized_stirling(ctx3, kind, n, k, COMPLETE)
            assert normalized_stirling(ctx3, kind, n, k, Flavor.associated(0)) == complete
            assert normalized_stirling(ctx3, kind, n, k, Flavor.restricted(m)) == complete


def test_restricted_drops_high_terms(ctx3):
    """With only the x term, {n, k} at restricted(0) is 1 exactly when n = k"""
    flavor = Flavor.restricted(0)
    assert normalized_stirling(ctx3, StirlingKind.SECOND, 3, 3, flavor) == 1
    assert normalized_stirling(ctx3, StirlingKind.SECOND, 4, 2, flavor).is_zero
    # z^4 = z z^3 + z^3 z in e_C^2
    expected = 2 * ctx3.d_frac(1).inverse()
    assert normalized_stirling(ctx3, StirlingKind.SECOND, 4, 2, COMPLETE) == expected


def test_ladder_grows_with_demand(ctx3):
    """Asking for a larger n after a small one still gives exact values"""
    small = normalized_stirling(ctx3, StirlingKind.SECOND, 5, 3)
    large = normalized_stirling(ctx3, StirlingKind.SECOND, 81, 3)
    fresh = CarlitzContext.for_order(3)
    assert normalized_stirling(fresh, StirlingKind.SECOND, 81, 3) == large
    assert normalized_stirling(fresh, StirlingKind.SECOND, 5, 3) == small


def test_untruncated_numbers_match_series_at_N_zero(ctx3):
    for n in range(0, 25):
        assert bc_untruncated(ctx3, n) == bc_series(ctx3, 0, n)
        assert cc_untruncated(ctx3, n) == cc_series(ctx3, 0, n)


def test_stirling_table(ctx3):
    rows = stirling_table(ctx3, StirlingKind.SECOND, COMPLETE, range(0, 4), range(0, 3))
    assert len(rows) == 12
    assert [(row.n, row.k) for row in rows[:3]] == [(0, 0), (0, 1), (0, 2)]
    assert rows[0].value == 1
    assert all(row.kind is StirlingKind.SECOND for row in rows)
