import io
import json
import subprocess
import sys

import pytest

from chernpn.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call("--json", *argv)
    return code, json.loads(out) if out else None


def test_chern():
    code, doc = call_json("chern", "O(2)+T(-1)", "-n", "3")
    assert code == 0
    assert doc["rank"] == 4 and doc["chern"] == [3, 3, 3]
    assert doc["c_t"] == "1 + 3t + 3t^2 + 3t^3"
    code, out, _ = call("chern", "O(2)+T(-1)", "-n", "3")
    assert "rank 4" in out and "c_2 = 3" in out


def test_subcommand_json_flag():
    code, out, _ = call("chern", "T", "-n", "2", "--json")
    assert json.loads(out)["chern"] == [3, 3]


def test_schwarzenberger_fail():
    code, doc = call_json("schwarzenberger", "--chern", "3,4,2", "-r", "3", "-n", "4")
    assert code == 1
    assert doc["verdict"] == "FAIL" and doc["witness_twist"] == 0 and doc["chi"] == "55/6"
    code, out, _ = call("schwarzenberger", "--chern", "3,4,2", "-r", "3", "-n", "4")
    assert code == 1 and "FAIL" in out and "S_4^3" in out


def test_schwarzenberger_pass():
    code, doc = call_json("schwarzenberger", "--chern", "3,3,1", "-r", "3", "-n", "3")
    assert code == 0 and doc["verdict"] == "PASS"


def test_cohom_chi_hilbert_reduce():
    assert call_json("cohom", "O(1)+Omega(2)", "-n", "3")[1]["h"] == [10, 0, 0, 0]
    assert call_json("cohom", "T", "-n", "4", "--twist", "-3")[1]["h"][:2] == [0, 0]
    assert call_json("chi", "O(2)+O(1)", "-n", "2")[1]["chi"] == 9
    doc = call_json("chi", "--chern", "3,3,2", "-r", "3", "-n", "3")[1]
    assert doc["chi"] == "25/2" and doc["integral"] is False
    doc = call_json("hilbert", "--chern", "", "-r", "1", "-n", "2")[1]
    assert doc["coefficients"] == [1, "3/2", "1/2"]
    assert doc["values"] == {"0": 1, "1": 3, "2": 6}
    doc = call_json("reduce", "--chern", "3,0,0", "-r", "1", "-n", "3", "--h0", "10")[1]
    assert doc["dual_kernel"]["chern"] == [3, 9, 27] and doc["dual_kernel"]["rank"] == 9


def test_classify_and_enumerate():
    code, doc = call_json("classify", "--verify", "-n", "4")
    assert code == 0 and doc["passed"]
    code, out, _ = call("classify", "-n", "2")
    assert code == 0 and "O(3)" in out
    code, doc = call_json("enumerate", "-n", "2", "--c2-max", "1")
    assert [c["summands"] for c in doc["candidates"]] == [["O(3)"]]


def test_claims_command():
    code, doc = call_json("claims")
    assert code == 0 and doc["passed"]
    code, out, _ = call("claims")
    assert out.strip().endswith("claims pass")


@pytest.mark.parametrize("argv", [("classify", "--verify", "-n", "3"), ("claims",)])
def test_json_deterministic(argv):
    assert call("--json", *argv)[1] == call("--json", *argv)[1]


def test_parse_error_echoes_grammar():
    code, out, err = call("chern", "O(2)+", "-n", "3")
    assert code == 1 and out == ""
    assert "expected one of" in err and "grammar:" in err and "quot" in err


def test_computation_error():
    code, _, err = call("chern", "Omega^5", "-n", "3")
    assert code == 1 and "InvalidAtDimension" in err
    code, _, err = call("cohom", "wedge2(T)", "-n", "3")
    assert code == 1 and "UnsupportedExpression" in err


@pytest.mark.parametrize("argv", [
    (), ("chern",), ("chern", "T"), ("chi", "--chern", "3,3", "-n", "2"),
    ("schwarzenberger", "--chern", "3,x", "-r", "2", "-n", "2"), ("bogus",),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "chernpn", "chern", "O(3)", "-n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "c_2 = 0" in proc.stdout
