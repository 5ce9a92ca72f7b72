# carlitz/tests/test_commands.py
import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from carlitz.management.commands.compute import Command as ComputeCommand
from carlitz.selfcheck import SelfCheck
from carlitz.serialization import SPECIAL_COLUMNS


def run(*args, **options) -> str:
    out = StringIO()
    call_command(*args, stdout=out, **options)
    return out.getvalue()


def exit_code(*args, **options) -> int:
    with pytest.raises(CommandError) as excinfo:
        run(*args, **options)
    return excinfo.value.returncode


def test_compute_golden_value():
    output = run("compute", "bc", r=3, N=2, n=18)
    assert output.startswith("BC_{2,18} over F_3 [series]\n")
    assert "normalized: " in output


def test_compute_off_support_is_zero():
    output = run("compute", "bc", r=3, N=2, n=19)
    assert "  value:      0\n" in output
    assert "  normalized: 0\n" in output


def test_compute_json():
    data = json.loads(run("compute", "cc", r=3, N=3, n=54, method="binomial", format="json"))
    assert (data["family"], data["N"], data["n"], data["method"]) == ("cc", 3, 54, "binomial")
    assert data["normalized_den"] != "1"


def test_compute_all_methods_lists_every_route():
    lines = run("compute", "bc", r=3, N=2, n=18, method="all").splitlines()
    assert lines[0] == "N\tn\tmethod\tvalue\tnormalized"
    assert [line.split("\t")[2] for line in lines[1:]] == [
        "series",
        "composition",
        "binomial",
        "stirling",
        "quotient",
    ]
    assert len({tuple(line.split("\t")[3:]) for line in lines[1:]}) == 1


def test_compute_stirling():
    data = json.loads(
        run("compute", "stirling2", r=3, n=27, k=1, flavor="assoc", m=2, format="json")
    )
    assert (data["kind"], data["flavor"], data["m"]) == ("second", "associated", 2)


def test_compute_ignores_the_table_limit(settings):
    settings.CARLITZ_LAB_MAX_TABLE_N = 10
    assert run("compute", "bc", r=3, N=2, n=18).startswith("BC_{2,18} over F_3 [series]\n")
    assert exit_code("table", "bc", r=3, N="2", n="0..18") == 1


def test_compute_over_extension_field():
    output = run("compute", "cc", r=4, N=1, n=12, modulus="1,1,1")
    assert output.startswith("CC_{1,12} over F_4 [series]\n")


def test_table_csv(tmp_path):
    target = tmp_path / "bc.csv"
    run("table", "bc", r=3, N="1..2", n="0..36", step=6, format="csv", output=str(target))
    lines = target.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(f'"{column}"' for column in SPECIAL_COLUMNS)
    assert len(lines) == 1 + 2 * 7


def test_table_empty_range_is_header_only():
    assert run("table", "bc", r=3, N="2", n="5..2") == "N\tn\tmethod\tvalue\tnormalized\n"


def test_table_is_deterministic_across_workers():
    serial = run("table", "cc", r=3, N="1", n="0..24", step=6, workers=1, format="json")
    parallel = run("table", "cc", r=3, N="1", n="0..24", step=6, workers=2, format="json")
    assert serial == parallel


@pytest.mark.parametrize(
    "args,options",
    [
        (("compute", "bc"), {"r": 6, "n": 1}),
        (("compute", "bc"), {"r": 9, "p": 2, "n": 1}),
        (("compute", "bc"), {"r": 9, "modulus": "1,x", "n": 1}),
        (("compute", "bc", "--r", "3", "--n", "1", "--method", "newton"), {}),
        (("compute", "stirling1"), {"r": 3, "n": 4, "k": 2, "method": "series"}),
        (("table", "bc"), {"r": 3, "n": "0..200000"}),
        (("table", "bc"), {"r": 3, "n": "a..b"}),
        (("table", "bc"), {"r": 3, "n": "0..3", "workers": 0}),
    ],
    ids=[
        "not-prime-power",
        "wrong-p",
        "bad-modulus",
        "unknown-method",
        "method-on-stirling",
        "too-large",
        "bad-range",
        "no-workers",
    ],
)
def test_usage_errors_exit_with_one(args, options):
    assert exit_code(*args, **options) == 1


def test_quotient_beyond_the_cap_exits_with_two():
    assert exit_code("compute", "bc", r=3, N=1, n=30, method="quotient") == 2


def test_exit_codes_from_the_command_line(capsys):
    with pytest.raises(SystemExit) as excinfo:
        ComputeCommand().run_from_argv(["manage.py", "compute", "bc", "--r", "6", "--n", "1"])
    assert excinfo.value.code == 1
    with pytest.raises(SystemExit) as excinfo:
        ComputeCommand().run_from_argv(["manage.py", "compute", "bc", "--r", "3"])
    assert excinfo.value.code == 1
    assert "--n" in capsys.readouterr().err


def test_selfcheck_command():
    output = run("selfcheck", check=["lucas_oracle", "golden_bc"])
    assert output.splitlines()[0] == "selfcheck level=fast"
    assert "PASS  lucas_oracle" in output
    data = json.loads(run("selfcheck", check=["golden_cc"], format="json"))
    assert data["passed"] is True


def test_selfcheck_failure_exits_with_three(monkeypatch):
    monkeypatch.setattr(
        SelfCheck, "check_lucas", lambda self, result: result.expect_true("forced", False)
    )
    assert exit_code("selfcheck", check=["lucas_oracle"]) == 3
