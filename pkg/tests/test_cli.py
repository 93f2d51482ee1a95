import json
import subprocess
import sys

import pytest

from motivic.arith import L
from motivic.cli import main
from motivic.parsing import parse_class, parse_series
from motivic.varieties import count_parts_at_most
from motivic.zeta import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_zeta_text(capsys):
    assert run(capsys, "zeta", "--class", "L", "--order", "3") == (
        0,
        "1 + L*T + L^2*T^2 + L^3*T^3 + O(T^4)\n",
        "",
    )
    assert run(capsys, "zeta", "--class", "1", "--order", "2")[1] == "1 + T + T^2 + O(T^3)\n"


def test_zeta_json(capsys):
    code, out, _ = run(capsys, "zeta", "--class", "1+L", "--order", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert parse_class(data["coefficients"][2]) == 1 + L + L ** 2
    assert parse_series(data["series"]).coeff(2) == 1 + L + L ** 2


def test_power(capsys):
    code, out, _ = run(capsys, "power", "--series", "1+T", "--exponent", "2")
    assert code == 0 and out.startswith("1 + 2*T + T^2 + O(")
    code, out, _ = run(capsys, "power", "--series", "1+T", "--exponent", "L", "--order", "2")
    assert out == "1 + L*T + (L^2 - L)*T^2 + O(T^3)\n"
    code, out, _ = run(capsys, "power", "--series", "1+T+O(T^3)", "--exponent", "L", "--json")
    assert json.loads(out)["order"] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("power", "--series", "1+T", "--exponent", "1/(L-1)"),
        ("zeta", "--class", "L+", "--order", "2"),
        ("zeta", "--class", "1/(L-1)", "--order", "2"),
        ("power", "--series", "2+T", "--exponent", "L"),
        ("oracle", "--space", "P^3", "--q", "2", "--m", "2", "--brute-force"),
        ("oracle", "--space", "X^3", "--q", "2", "--m", "2"),
        ("strata", "--m", "0", "--max-dim", "2"),
    ],
)
def test_exit_code_two_with_message(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err
    assert out == ""


def test_unsupported_exponent_message(capsys):
    _, _, err = run(capsys, "power", "--series", "1+T", "--exponent", "1/(L-1)")
    assert "(1 - T^1)" in err


@pytest.mark.parametrize("argv", [("zeta", "--class", "L", "--bogus"), ("verify", "nothing"), ()])
def test_argparse_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    assert info.value.code == 2


def test_verify_theorem1(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", "--n", "3", "--order", "12")
    assert code == 0
    assert out.splitlines()[0] == "PASS theorem1 n=3 order=12 (13 checks)"


def test_verify_bcstar_prints_c1(capsys):
    code, out, _ = run(capsys, "verify", "bcstar", "--order", "8")
    assert code == 0
    assert "c_1 = 1/(L - 1)\n" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify", "scaling", "--order", "4", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"] is True
    reports = [VerificationReport.from_dict(r) for r in data["reports"]]
    assert [r.name for r in reports] == ["scaling"] * 5
    assert [json.loads(r.to_json()) for r in reports] == data["reports"]


def test_verify_seeded_output_is_byte_stable(capsys):
    first = run(capsys, "verify", "lemma", "--trials", "5", "--seed", "3")
    second = run(capsys, "verify", "lemma", "--trials", "5", "--seed", "3")
    assert first == second and first[0] == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    from motivic import suites

    def broken(*args, **kwargs):
        r = VerificationReport("theorem1", {"n": 0})
        r.check("1 = 2", 1, 2)
        return [r]

    monkeypatch.setattr(suites, "suite_theorem1", broken)
    code, out, _ = run(capsys, "verify", "theorem1")
    assert code == 1
    assert "1 = 2: 1 != 2" in out
    assert out.splitlines()[-1].startswith("FAIL")


def test_strata_small(capsys):
    code, out, _ = run(capsys, "strata", "--m", "2", "--max-dim", "2")
    assert code == 0
    assert out.splitlines()[4].startswith("dim 2: 2 strata <-> 2 cells")
    code, out, _ = run(capsys, "strata", "--m", "1", "--max-dim", "5", "--json")
    data = json.loads(out)
    assert [d["strata"] for d in data["dimensions"]] == [1] * 6


def test_strata_partition_table(capsys):
    code, out, _ = run(capsys, "strata", "--m", "8", "--max-dim", "40", "--json")
    data = json.loads(out)
    assert code == 0 and data["pass"]
    for row in data["dimensions"]:
        assert row["strata"] == row["cells_parts_at_most_m"] == count_parts_at_most(8, row["n"])


def test_oracle_examples(capsys):
    code, out, _ = run(capsys, "oracle", "--space", "A^2", "--q", "3", "--m", "4", "--json")
    data = json.loads(out)
    assert code == 0
    assert int(data["motivic"]) == data["weil"] == data["closed_points"] == 6561
    code, out, _ = run(capsys, "oracle", "--space", "P^1", "--q", "2", "--m", "2", "--brute-force", "--json")
    data = json.loads(out)
    assert int(data["motivic"]) == data["weil"] == data["closed_points"] == data["brute_force"] == 7
    code, out, _ = run(capsys, "oracle", "--space", "P^1", "--q", "2", "--m", "3")
    assert code == 0 and "15" in out and out.rstrip().endswith("PASS")


def test_color_toggle(capsys, monkeypatch):
    monkeypatch.setenv("MOTIVIC_COLOR", "1")
    _, out, _ = run(capsys, "verify", "theorem1", "--n", "1", "--order", "2")
    assert "\033[32mPASS\033[0m" in out
    monkeypatch.setenv("MOTIVIC_COLOR", "0")
    _, out, _ = run(capsys, "verify", "theorem1", "--n", "1", "--order", "2")
    assert "\033[" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "motivic.cli", "zeta", "--class", "L", "--order", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1 + L*T + O(T^2)\n"
