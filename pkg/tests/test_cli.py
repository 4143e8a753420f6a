import json
import subprocess
import sys

import pytest

from genhurwitz import __version__
from genhurwitz.cli import main
from genhurwitz.genfun import GenFunSeries
from genhurwitz.poly import PPoly


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hurwitz_text(capsys):
    code, out, _ = run(capsys, "hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,1);(2,1);(3)")
    assert code == 0
    assert out.strip() == "1 (2h-2 = -2)"


def test_hurwitz_json_and_oracle(capsys):
    code, out, _ = run(
        capsys, "hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,1);(2,1)", "--oracle", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"value": "1/2", "euler2h2": -4, "method": "enumeration"}
    code, out, _ = run(capsys, "hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,1)", "--format", "json")
    assert json.loads(out) == {"value": "0/1", "euler2h2": None, "method": "character"}


def test_hurwitz_budget_error(capsys):
    code, _, err = run(capsys, "hurwitz", "--genus", "1", "--degree", "4", "--oracle", "--budget", "5")
    assert code == 1
    assert "budget" in err


def test_degree_mismatch_is_computation_error(capsys):
    code, _, err = run(capsys, "hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2)")
    assert code == 1 and "not a partition of 3" in err


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["hurwitz", "--genus", "0", "--degree", "3", "--profiles", "(2,x)"], "--profiles"),
        (["hurwitz", "--genus", "-1", "--degree", "3"], "--genus"),
        (["cutjoin", "show", "--degree", "2", "--partition", "2", "--bogus"], "--bogus"),
        (["genfun", "--degree", "3", "--marks", "(2,1)", "--format", "xml"], "--format"),
    ],
)
def test_usage_errors(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert flag in err and "usage:" in err


def test_version(capsys):
    code, out, _ = run(capsys, "--version")
    assert code == 0
    assert __version__ in out and "json format" in out


def test_cutjoin_show(capsys):
    code, out, _ = run(capsys, "cutjoin", "show", "--degree", "2", "--partition", "(2)")
    assert code == 0
    assert set(out.strip().split(" + ")) == {"1/2 z^2 p_2 ∂^2/∂p_1∂p_1", "p_1 p_1 ∂/∂p_2"}
    code, out, _ = run(capsys, "cutjoin", "show", "--degree", "2", "--partition", "(2)", "--normalized", "--z", "1")
    assert out.strip() == "1/2 p_2 ∂^2/∂p_1∂p_1 + p_1 p_1 ∂/∂p_2"


def test_cutjoin_constants(capsys):
    _, a, _ = run(capsys, "cutjoin", "constants", "--degree", "4", "--format", "json")
    _, b, _ = run(capsys, "cutjoin", "constants", "--degree", "4", "--oracle", "--format", "json")
    a, b = json.loads(a), json.loads(b)
    assert a["constants"] == b["constants"]
    code, _, err = run(capsys, "cutjoin", "constants", "--degree", "4", "--oracle", "--cap", "3")
    assert code == 1 and "capped" in err


def test_cutjoin_verify(capsys):
    code, out, _ = run(capsys, "cutjoin", "verify", "--degree", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_genfun_text_and_json(capsys):
    code, out, _ = run(capsys, "genfun", "--degree", "3", "--marks", "(2,1)", "--order", "3")
    assert code == 0
    assert out.strip().startswith("1/6*z^-6*p_(1,1,1) + 1/2*u*z^-4*p_(2,1)")
    code, out, _ = run(capsys, "genfun", "--degree", "2", "--marks", "(2)", "--order", "2", "--double", "--format", "json")
    data = json.loads(out)
    assert data["k"] == 1
    series = GenFunSeries.from_json(data)
    assert json.dumps(series.to_json(), sort_keys=True) == json.dumps(data, sort_keys=True)
    first = PPoly.from_json(data["coefficients"][0]["poly"])
    assert str(first) == "1/2*z^-2*q_(2)*p_(2) + 1/2*z^-4*q_(1,1)*p_(1,1)"


def test_genfun_methods_agree(capsys):
    args = ["genfun", "--degree", "3", "--genus", "1", "--marks", "(2,1);(3)", "--order", "2", "--format", "json"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--method", "direct")
    assert a == b


def test_char_table(capsys):
    code, out, _ = run(capsys, "char-table", "--degree", "3", "--format", "json")
    data = json.loads(out)
    assert data["shapes"] == [[3], [2, 1], [1, 1, 1]]
    assert data["table"] == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
    code, out, _ = run(capsys, "char-table", "--degree", "3")
    assert code == 0 and "(2,1)" in out
    code, _, _ = run(capsys, "char-table", "--degree", "12")
    assert code == 1


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify", "--degree", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and all(c["status"] == "PASS" for c in data["checks"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "genhurwitz", "hurwitz", "--genus", "1", "--degree", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "2 (2h-2 = 0)"
