"""Golden-file tests for every CLI subcommand.

Each case pins the exact bytes on stdout and the exit code. JSON cases are
additionally parsed so schema drift shows up as a readable failure.
"""

import json
import os
import pathlib
import subprocess

import pytest

CLI = os.environ.get("QHFORGE_CLI", "qhforge")
GOLDEN = pathlib.Path(__file__).parent / "golden"

CASES = [
    ("ring_info_g24", ["ring", "info", "--ring", "g24"], 0),
    ("ring_info_cpn2_json", ["--format", "json", "ring", "info", "--ring", "cpn:2"], 0),
    ("ring_mul_x2sq", ["ring", "mul", "--ring", "g24", "x2^2", "x2^2"], 0),
    ("ring_mul_relation_json",
     ["--format", "json", "ring", "mul", "--ring", "g24", "x2", "x1^2 - x2"], 0),
    ("ring_pow_sigma11", ["ring", "pow", "--ring", "g24", "x1^2 - x2", "4"], 0),
    ("ring_invert_x2", ["ring", "invert", "--ring", "g24", "x2"], 0),
    ("ring_invert_x1", ["ring", "invert", "--ring", "g24", "x1"], 1),
    ("ring_invert_x1_json", ["--format", "json", "ring", "invert", "--ring", "g24", "x1"], 1),
    ("units_classify_g24", ["units", "classify", "--ring", "g24"], 0),
    ("units_classify_p11_json",
     ["--format", "json", "units", "classify", "--ring", "prod:cpn:1,cpn:1"], 0),
    ("units_order_g24", ["units", "order", "--ring", "g24"], 0),
    ("group_units_p11",
     ["group", "units", "--ring", "prod:cpn:1,cpn:1", "--support", "2", "--coeff", "1",
      "--exp-bound", "1"], 0),
    ("group_units_p11_json",
     ["--format", "json", "group", "units", "--ring", "prod:cpn:1,cpn:1", "--support", "1",
      "--coeff", "1", "--exp-bound", "1"], 0),
    ("propd_check_g24", ["propd", "check", "--ring", "g24"], 0),
    ("propd_check_g24_json", ["--format", "json", "propd", "check", "--ring", "g24"], 0),
    ("propd_check_p12", ["propd", "check", "--ring", "prod:cpn:1,cpn:2"], 0),
    ("verdict_g24", ["verdict", "--ring", "g24"], 0),
    ("verdict_p12_json", ["--format", "json", "verdict", "--ring", "prod:cpn:1,cpn:2"], 0),
    ("seidel_phi_sigma", ["seidel", "phi-sigma", "--ring", "g24", "--c1vert", "-8",
                          "--coupling", "-8", "--elem", "x1"], 0),
    ("phi_faithful_mul", ["--phi-exponents", "ring", "mul", "--ring", "g24", "x2^2", "x2^2"], 0),
    ("verify_paper", ["verify-paper"], 0),
]


@pytest.mark.parametrize("name,args,expected_exit", CASES, ids=[c[0] for c in CASES])
def test_golden(name, args, expected_exit):
    proc = subprocess.run([CLI] + args, capture_output=True, text=True, timeout=300)
    assert proc.returncode == expected_exit, proc.stderr
    expected = (GOLDEN / f"{name}.txt").read_text()
    assert proc.stdout == expected
    if "--format" in args and "json" in args:
        payload = json.loads(proc.stdout)
        assert payload["schema_version"] == 1
        assert "report" in payload


def test_usage_errors_exit_2():
    proc = subprocess.run([CLI, "no-such-command"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([CLI, "ring", "mul", "--ring", "g24", "x2"], capture_output=True,
                          text=True)
    assert proc.returncode == 2
    proc = subprocess.run([CLI, "ring", "mul", "--ring", "nope:1", "x", "x"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    # Bad expressions are usage errors too.
    proc = subprocess.run([CLI, "ring", "mul", "--ring", "g24", "x2 +", "x2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_domain_errors_exit_1():
    proc = subprocess.run([CLI, "group", "units", "--ring", "g24", "--support", "1",
                           "--coeff", "1"], capture_output=True, text=True)
    assert proc.returncode == 1
    assert "NotAProductOfProjectiveSpaces" in proc.stderr


def test_default_bound_env(tmp_path):
    env = dict(os.environ, QHFORGE_DEFAULT_BOUND="3")
    proc = subprocess.run([CLI, "--format", "json", "units", "classify", "--ring", "g24"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["report"]["coeff_bound"] == 3


def test_dump_table(tmp_path):
    path = tmp_path / "table.json"
    proc = subprocess.run([CLI, "ring", "info", "--ring", "cpn:1", "--dump-table", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    table = json.loads(path.read_text())
    assert table["ring"] == "cpn:1@lambda"
    rows = {(r["left"], r["right"]): r["value"] for r in table["table"]}
    assert rows[("x", "x")][0]["basis"] == "1"
    assert rows[("x", "x")][0]["scalar"]["text"] == "t^2"
