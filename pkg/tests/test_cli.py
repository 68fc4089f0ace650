import json
import subprocess
import sys

import pytest

from qpsi.cli import main, parse_complex


def run_cli(args):
    proc = subprocess.run([sys.executable, "-m", "qpsi.cli", *args],
                          capture_output=True, text=True)
    return proc


def test_parse_complex():
    assert parse_complex("0.3+0.1i") == 0.3 + 0.1j
    assert parse_complex("-2") == -2.0
    assert parse_complex("0.5i") == 0.5j
    assert parse_complex("i") == 1j
    assert parse_complex("1e-2+3e-1i") == 0.01 + 0.3j
    with pytest.raises(ValueError):
        parse_complex("banana")


def test_eval_mu(capsys):
    code = main(["eval", "mu", "--q", "0.25", "--format", "json",
                 "--u", "0.3+0.1i", "--v", "0.2", "--alpha", "1"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert "value" in data and "window" in data


def test_eval_alpha_zero_constant(capsys):
    code = main(["eval", "mu", "--q", "0.25", "--format", "json",
                 "--u", "0.3", "--v", "0.1", "--alpha", "0"])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    # -i q^(-1/8) with q = 0.25
    assert data["value"].startswith("0-1.189207")


def test_divergent_exit_code():
    proc = run_cli(["eval", "psi", "--q", "0.3", "--upper", "0.5",
                    "--lower", "0.3", "--x", "1.5"])
    assert proc.returncode == 3
    assert "divergent" in proc.stderr.lower()


def test_usage_errors():
    assert main(["eval", "mu", "--q", "0.25"]) == 2          # missing params
    assert main(["eval", "mu", "--u", "0.1", "--v", "0.2"]) == 2  # no nome
    assert main(["suite", "--ids", "NOPE"]) == 2
    assert main(["expand", "order99.zeta"]) == 2


def test_expand_example(capsys):
    code = main(["expand", "order3.f", "--order", "10", "--format", "csv"])
    assert code == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[:4] == ["0,1,1,1", "1,1,1,1", "2,1,-2,1", "3,1,3,1"]


def test_expand_json_rational_strings(capsys):
    code = main(["expand", "order6.phi_minus", "--order", "5",
                 "--format", "json"])
    assert code == 0
    pairs = json.loads(capsys.readouterr().out)
    assert all(isinstance(k, str) and isinstance(c, str) for k, c in pairs)


def test_verify_determinism(capsys):
    args = ["verify", "MU_SYMMETRY", "--seed", "11", "--draws", "4",
            "--format", "json"]
    assert main(args) == 0
    out1 = capsys.readouterr().out
    assert main(args) == 0
    out2 = capsys.readouterr().out
    assert out1 == out2


def test_verify_catalog_entry(capsys):
    assert main(["verify", "order2.A", "--order", "12",
                 "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["all_pass"] is True
