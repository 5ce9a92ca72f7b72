# carlitz/tests/test_config.py
import pytest

from carlitz.config import (
    IntRange,
    OutputFormat,
    RunConfig,
    RunFamily,
    parse_flavor,
    parse_methods,
)
from carlitz.special import Family, Method
from carlitz.stirling import COMPLETE, Flavor, StirlingKind
from core.exceptions import ConfigurationError


def test_range_parsing():
    assert IntRange.parse("7") == IntRange(7, 7)
    assert IntRange.parse(" 0 .. 12 ") == IntRange(0, 12)
    assert list(IntRange.parse("0..12", step=6).values) == [0, 6, 12]
    assert str(IntRange.parse("3..5")) == "3..5"
    assert str(IntRange.single(4)) == "4"


def test_empty_range():
    empty = IntRange.parse("5..2")
    assert empty.is_empty
    assert list(empty.values) == []


@pytest.mark.parametrize("text", ["", "a..b", "1..", "..3", "1...3", "1,2"])
def test_malformed_ranges(text):
    with pytest.raises(ConfigurationError):
        IntRange.parse(text)


def test_range_step_must_be_positive():
    with pytest.raises(ConfigurationError):
        IntRange(0, 3, 0)


def test_run_family_mapping():
    assert RunFamily("bc").special_family is Family.BC
    assert RunFamily.STIRLING1.stirling_kind is StirlingKind.FIRST
    assert RunFamily.STIRLING2.is_stirling
    assert not RunFamily.CC.is_stirling
    assert str(OutputFormat.CSV) == "csv"


def test_parse_flavor():
    assert parse_flavor("complete", None) == COMPLETE
    assert parse_flavor(None, None) == COMPLETE
    assert parse_flavor("assoc", 2) == Flavor.associated(2)
    assert parse_flavor("Restricted", 1) == Flavor.restricted(1)
    with pytest.raises(ConfigurationError):
        parse_flavor("complete", 1)
    with pytest.raises(ConfigurationError):
        parse_flavor("associated", None)
    with pytest.raises(ConfigurationError):
        parse_flavor("partial", 1)


def test_parse_methods():
    assert parse_methods(None) == (Method.SERIES,)
    assert parse_methods("binomial") == (Method.BINOMIAL,)
    assert parse_methods("all") == tuple(Method)
    with pytest.raises(ConfigurationError):
        parse_methods("newton")


def test_validate_returns_the_field():
    config = RunConfig(RunFamily.BC, r=9, n_range=IntRange(0, 18))
    spec = config.validate()
    assert (spec.p, spec.e) == (3, 2)


@pytest.mark.parametrize(
    "changes",
    [
        {"r": 6},
        {"r": 9, "p": 2},
        {"r": 9, "e": 3},
        {"r": 9, "modulus": (1, 1, 1)},
        {"workers": 0},
        {"n_range": IntRange(-2, 4)},
        {"n_range": IntRange(0, 200_000)},
        {"flavor": Flavor.associated(1)},
    ],
    ids=[
        "not-prime-power",
        "wrong-p",
        "wrong-e",
        "reducible-modulus",
        "no-workers",
        "negative-n",
        "too-large",
        "flavor-on-bc",
    ],
)
def test_validate_rejects(changes):
    config = RunConfig(RunFamily.BC, **{"r": 3, **changes})
    with pytest.raises(ConfigurationError):
        config.validate()


def test_allow_large_lifts_the_table_limit():
    config = RunConfig(RunFamily.BC, r=3, n_range=IntRange(0, 200_000), allow_large=True)
    config.validate()


def test_single_runs_need_single_indices():
    config = RunConfig(RunFamily.CC, r=3, n_range=IntRange(0, 3))
    config.validate()
    with pytest.raises(ConfigurationError):
        config.validate(single=True)


def test_stirling_families_take_no_method():
    config = RunConfig(
        RunFamily.STIRLING2, r=3, n_range=IntRange.single(5), k_range=IntRange.single(2)
    )
    config.validate(single=True)
    config.method_given = True
    with pytest.raises(ConfigurationError):
        config.validate()


def test_negative_N_is_ignored_for_stirling():
    """N is not one of the Stirling indices"""
    config = RunConfig(RunFamily.STIRLING1, r=3, N_range=IntRange.single(-1))
    config.validate()


def test_table_limit_does_not_apply_to_single_values():
    config = RunConfig(
        RunFamily.BC, r=3, N_range=IntRange.single(10), n_range=IntRange.single(118_098)
    )
    config.validate(single=True)
    with pytest.raises(ConfigurationError):
        config.validate()
