import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from wfcomb.cli import main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, input=None):
        return runner.invoke(main, list(args), input=input)
    return invoke


@pytest.mark.parametrize("quad,want", [
    ({"lp": [6, 4, 2], "ep": [1, -1, 1], "lm": [], "em": []}, [5, 3, 3, 1, 1]),
    ({"lp": [4, 2], "ep": [1, 1], "lm": [2], "em": [1]}, [9]),
    ({"lp": [2], "ep": [-1], "lm": [2], "em": [-1]}, [3, 1, 1]),
])
def test_wavefront(run, quad, want):
    res = run("wavefront", json.dumps(quad))
    assert res.exit_code == 0
    assert json.loads(res.stdout) == want


def test_stdin_input(run):
    res = run("wavefront", input='{"lp":[6,4,2],"ep":[1,-1,1]}')
    assert json.loads(res.stdout) == [5, 3, 3, 1, 1]


def test_misc_commands(run):
    assert json.loads(run("dual", "--class", "symp", "[2,2]").stdout) == [3, 1, 1]
    assert json.loads(run("sp", "[4,3,3,2]").stdout) == [4, 4, 2, 2]
    out = json.loads(run("induce", "[2,2]", "[3,1]").stdout)
    assert out["lambda"] == [6, 2] and out["regular"] is True
    fam = json.loads(run("family", "[2,2]").stdout)
    assert fam["size"] == 4 and len(fam["members"]) == 4


def test_table(run):
    rows = json.loads(run("table-5-3", "[6,4,2]").stdout)
    assert len(rows) == 8
    row = next(r for r in rows if r["eps"] == [1, 1, -1])
    assert row["k"] == 1 and row["mu"] == [9, 1, 1, 1, 1]
    pretty = run("--pretty", "table-5-3", "[6,4,2]")
    assert pretty.exit_code == 0 and len(pretty.stdout.splitlines()) == 9


def test_springer_roundtrip(run):
    sp = {"lambda": [6, 4, 2], "class": "symp", "eps": {"6": 1, "4": -1, "2": 1}}
    datum = json.loads(run("springer", json.dumps(sp)).stdout)
    assert datum["k"] == 2
    back = json.loads(run("springer", "--inverse", "--n", "6", json.dumps(datum)).stdout)
    assert back == sp


def test_symb_roundtrip(run):
    sym = json.loads(run("symb", '{"r":1,"alpha":[1],"beta":[]}').stdout)
    back = json.loads(run("symb", "--inverse", json.dumps(sym)).stdout)
    assert (back["r"], back["alpha"], back["beta"]) == (1, [1], [])


def test_outputs_reparse(run):
    for args in [("dual", "[4,2]"), ("family", "[4,2,2]"), ("induce", "[2,2]", "[]"),
                 ("verify", "springer", "--bound", "2")]:
        res = run(*args)
        assert json.loads(json.dumps(json.loads(res.stdout))) == json.loads(res.stdout)


def test_verify_exit_codes(run):
    res = run("verify", "all", "--bound", "0")
    assert res.exit_code == 0 and json.loads(res.stdout)["passed"]
    res = run("verify", "duality", "--bound", "8")
    assert res.exit_code == 0 and json.loads(res.stdout)["failures"] == []
    assert run("verify", "nonsense").exit_code != 0


@pytest.mark.parametrize("args", [
    ("dual", "[2,"),
    ("dual", '"abc"'),
    ("dual", "[2,1]"),
    ("wavefront", '{"lp":[3,3],"ep":[1]}'),
    ("table-5-3", "[6,4,4]"),
    ("dual", "--class", "nope", "[2]"),
])
def test_errors_are_json_on_stderr(run, args):
    res = run(*args)
    assert res.exit_code == 2
    diag = json.loads(res.stderr)
    assert diag["error"] in ("ParseError", "DomainError") and diag["message"]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "wfcomb", "sp", "[4,3,3,2]"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout) == [4, 4, 2, 2]
