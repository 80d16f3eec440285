import io
import json
import subprocess
import sys

import jsonschema
import pytest

from qdisc.cli import main
from qdisc.report import REPORT_SCHEMA

SMALL = ["verify", "--max-k", "2", "--max-l", "2", "--cone", "2,3", "--q-samples", "1/2"]


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err, inp=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_eval():
    code, out, _ = run("eval", "z * zs")
    assert code == 0 and out.strip() == "1 - x"
    code, out, _ = run("eval", "integral(x)")
    assert out.strip() == "(q^2 + 1)/(q^4 + 1)"
    code, out, _ = run("-N", "3", "eval", "y")
    assert out.strip() == "z^3"


def test_check_exit_codes():
    code, out, _ = run("check", "d(z) == zs*w")
    assert code == 0 and out.startswith("true")
    code, out, _ = run("check", "w*ws == ws*w")
    assert code == 1
    assert "lhs = v" in out and "rhs = -q^6*v" in out
    code, _, err = run("check", "w == z")
    assert code == 2 and "kind mismatch" in err


def test_parse_and_type_errors():
    code, _, err = run("eval", "z +")
    assert code == 2 and "parse error" in err and "column 4" in err
    code, _, err = run("eval", "deg(z + zs)")
    assert code == 2 and "type error" in err
    code, _, err = run("eval", "x / 0")
    assert code == 2 and "division by zero" in err


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("verify", "--cone", "1")[0] == 2
    assert run("verify", "--q-samples", "abc")[0] == 2
    assert run("--help")[0] == 0


def test_reduce():
    code, out, _ = run("reduce", "x")
    assert code == 0
    assert "constant: (q^2 + 1)/(q^4 + 1)" in out
    assert "residual: 0" in out
    code, out, _ = run("reduce", "x * zs^2")
    assert "constant: 0" in out


def test_verify_small(tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(*SMALL, "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    jsonschema.validate(data, REPORT_SCHEMA)
    assert data["failed"] == 0 and data["passed"] == len(data["checks"])


def test_verify_tampered(tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(*SMALL, "--tamper", "omom", "--json", str(path))
    assert code == 1
    assert "(omom)" in out
    data = json.loads(path.read_text())
    jsonschema.validate(data, REPORT_SCHEMA)
    failed = [c for c in data["checks"] if c["status"] == "fail"]
    assert failed and all(c["paper_ref"] == "(omom)" for c in failed)
    assert data["failed"] == len(failed)


def test_verify_json_to_stdout():
    code, out, _ = run(*SMALL, "--json", "-", "--no-timing")
    assert code == 0
    data = json.loads(out[out.index("{"):])
    jsonschema.validate(data, REPORT_SCHEMA)
    assert "elapsed" not in data


def test_repl():
    code, out, err = run("repl", stdin="z*zs\nd(z) == zs*w\n# comment\n:reduce x\nfoo\n:quit\nz\n")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1 - x"
    assert lines[1].startswith("true")
    assert "constant: (q^2 + 1)/(q^4 + 1)" in out
    assert "unknown name" in err
    assert lines[-1] != "z"


@pytest.mark.parametrize("argv,expected", [
    (["eval", "w * ws"], 0),
    (["check", "zs*z == 1 - q^2*x"], 0),
    (["check", "w*ws == ws*w"], 1),
    (["eval", "z +"], 2),
])
def test_module_entry_point(argv, expected):
    proc = subprocess.run([sys.executable, "-m", "qdisc", *argv], capture_output=True, text=True)
    assert proc.returncode == expected
