import json

import pytest

from hhbv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_delta(capsys):
    code, out, _ = run(capsys, "eval", "delta", "q1")
    assert code == 0 and json.loads(out)["value"] == "d*p1"


def test_eval_bracket(capsys):
    code, out, _ = run(capsys, "eval", "bracket", "q2", "e")
    data = json.loads(out)
    assert code == 0 and data["value"] == "d*p2*e" and data["raw_value"] == "d*xyx"


def test_eval_cup_class(capsys):
    code, out, _ = run(capsys, "eval", "cup", "q1", "q2")
    data = json.loads(out)
    assert code == 0 and data["value"] == "0" and data["reduced_by_coboundary"]


def test_eval_specializations(capsys):
    code, out, _ = run(capsys, "eval", "delta", "q1", "--d", "0", "--d", "1")
    values = [r["value"] for r in json.loads(out)]
    assert code == 0 and values == ["0", "p1"]


@pytest.mark.parametrize("argv", [
    ["eval", "delta", "x1"],
    ["eval", "delta", "q1", "q2"],
    ["eval", "cup", "w1", "e", "--max-degree", "5"],
    ["eval", "bracket", "q1", "q2", "--max-degree", "4"],
    ["eval", "delta", "q1", "--d", "z"],
    ["delta-table", "--max-degree", "2"],
    ["bogus"],
    ["verify", "--format", "xml"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_fixtures_empty_selection(capsys):
    code, out, _ = run(capsys, "fixtures", "--select", "")
    assert code == 0 and json.loads(out)["fixtures"] == []


def test_fixtures_mismatches_do_not_fail(capsys):
    code, out, _ = run(capsys, "fixtures", "--format", "markdown")
    assert code == 0 and "| fixture-id |" in out


def test_verify_report(capsys, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    code1 = main(["verify", "--seed", "3", "--samples", "16", "--out", str(out1)])
    code2 = main(["verify", "--seed", "3", "--samples", "16", "--out", str(out2)])
    assert out1.read_bytes() == out2.read_bytes()
    data = json.loads(out1.read_text())
    failing = [s["suite"] for s in data["suites"] if not s["passed"]]
    assert code1 == code2 == (1 if failing else 0)
    # only the relation ideal has violations (two degree-3 relations)
    assert failing == ["ideal_relations"]


def test_delta_table_d0(capsys, tmp_path):
    out = tmp_path / "t.json"
    code = main(["delta-table", "--d", "0", "--force", "--out", str(out)])
    data = json.loads(out.read_text())
    assert code == 0 and data["diff"] == []
    rows = {r["input"]: r["delta"] for r in data["tables"]["0"]}
    assert rows["q1"] == "0" and rows["p1*q1"] == "p2"
