from __future__ import annotations

import json

import pytest

from qblocks.cli import main


def run(capsys, *argv: str) -> tuple[int, dict | str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    try:
        return code, json.loads(out)
    except json.JSONDecodeError:
        return code, out


def test_classify_principal(capsys):
    code, doc = run(capsys, "classify", "2,0,-2")
    assert code == 0
    assert set(doc) == {"command", "version", "inputs", "results", "warnings"}
    assert doc["results"]["blockClass"] == "Principal"
    assert doc["results"]["clifford"] == {"dimE": 2, "dimKernel": 1, "simpleDim": "1+1e", "type": "M"}


def test_projectives_table(capsys):
    code, doc = run(capsys, "projectives", "--algebra", "sq", "--bound", "4", "0,0,0")
    assert code == 0
    assert doc["results"]["summary"]["P(0)"] == {"C": 4, "L1": 2, "L2": 2}


@pytest.mark.parametrize("argv", [
    ["classify", "1,1,1"],
    ["classify", "1,x,0"],
    ["classify", "--algebra", "gl", "0,0,0"],
    ["filtration", "0,0,0", "--vertex", "9,0,-9", "--bound", "6"],
    ["quiver", "0,0,0", "--bound", "6", "--cap", "1"],
    ["verify-all", "--bound", "4"],
    ["nonsense"],
])
def test_bad_input_exits_2(capsys, argv):
    assert main(argv) == 2


def test_negative_weight_after_separator(capsys):
    code, doc = run(capsys, "euler", "--depth", "4", "--", "-1,0,1")
    assert code == 0
    assert doc["inputs"]["weight"] == "-1,0,1"
    assert doc["results"]["stats"]["sdim"] == 0


def test_euler_reports_incomplete_window(capsys):
    code, doc = run(capsys, "euler", "--depth", "2", "4,0,-4")
    assert code == 0 and doc["warnings"]


def test_filtration_and_block(capsys):
    code, doc = run(capsys, "filtration", "--algebra", "sq", "--bound", "6", "1,0,-1")
    assert doc["results"]["sizes"] == [1, 1, 1, 1, 1]
    code, doc = run(capsys, "block", "--algebra", "sq", "--bound", "6", "0,0,0")
    assert doc["results"]["quiver"]["convention"] == "right-to-left"


def test_wildness(capsys):
    code, doc = run(capsys, "wildness", "0,0,0")
    assert doc["results"]["verdict"] == "Wild"
    code, doc = run(capsys, "wildness", "--algebra", "sq", "0,0,0")
    assert doc["results"]["verdict"] == "Tame"


def test_dot_to_file(tmp_path, capsys):
    target = tmp_path / "q.dot"
    assert main(["quiver", "--bound", "6", "--dot", "-o", str(target), "1,0,0"]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text().startswith("digraph")
    assert main(["filtration", "--bound", "6", "--dot", "0,0,0"]) == 0
    assert "rank=same" in capsys.readouterr().out


def test_env_defaults(capsys, monkeypatch):
    monkeypatch.setenv("QBLOCKS_BOUND", "6")
    _, doc = run(capsys, "block", "0,0,0")
    assert doc["inputs"]["bound"] == 6
    monkeypatch.setenv("QBLOCKS_BOUND", "six")
    assert main(["block", "0,0,0"]) == 2


def test_output_is_deterministic(capsys):
    main(["quiver", "--bound", "6", "0,0,0"])
    first = capsys.readouterr().out
    main(["quiver", "--bound", "6", "0,0,0"])
    assert capsys.readouterr().out == first


def test_verify_all(capsys):
    code, doc = run(capsys, "verify-all")
    assert code == 0 and doc["results"]["ok"]
    assert [c["criterion"] for c in doc["results"]["criteria"]] == list(range(1, 9))
