"""Tests for the command-line front end: schemas, formats, exit codes
and determinism."""

import json
import os

import pytest

from weilcoh.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def strip_timing(text):
    return "\n".join(line for line in text.splitlines()
                     if '"timing"' not in line)


def test_cohom_json_schema_and_values(capsys):
    code, out = run_cli(
        capsys, "cohom", "--n", "3", "--k", "1", "--part", "plus",
        "--ell", "1", "--max-degree", "6", "--buffer", "4",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "weilcoh/1"
    assert doc["command"] == "cohom"
    assert doc["params"]["n"] == 3 and doc["params"]["part"] == "plus"
    (table,) = doc["tables"]
    dims = {c["degree"]: c["dim"] for c in table["cells"]}
    assert dims == {0: 0, 1: 1, 2: 0, 3: 1, 4: 0, 5: 1, 6: 0}
    assert all(c["stabilized"] for c in table["cells"])
    assert isinstance(doc["timing"], float)


def test_cohom_ell_range(capsys):
    code, out = run_cli(
        capsys, "cohom", "--n", "2", "--k", "1", "--part", "minus",
        "--ell", "0..2", "--max-degree", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert [t["name"] for t in doc["tables"]] == [
        "cohomology part=minus ell=%d" % ell for ell in range(3)
    ]


def test_hilbert_cminus_example(capsys):
    code, out = run_cli(capsys, "hilbert", "--model", "cminus", "--k", "1",
                        "--max-degree", "6")
    assert code == 0
    doc = json.loads(out)
    cells = doc["tables"][0]["cells"]
    assert [c["dim"] for c in cells] == [1, 1, 2, 1, 2, 1, 2]


def test_csv_projection(capsys):
    code, out = run_cli(capsys, "hilbert", "--model", "cminus", "--k", "1",
                        "--max-degree", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "table,ell,degree,dim,stabilized"
    assert lines[1].endswith(",0,0,1,true")
    assert len(lines) == 5


def test_verify_signs_passes(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "signs", "--seed", "7",
                        "--n", "4", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["verdicts"] and all(v["pass"] for v in doc["verdicts"])


def test_pages_verdict(capsys):
    code, out = run_cli(capsys, "pages", "--n", "2", "--k", "2",
                        "--max-degree", "2")
    assert code == 0
    doc = json.loads(out)
    (verdict,) = doc["verdicts"]
    assert verdict["pass"]
    names = [t["name"] for t in doc["tables"]]
    assert len(names) == 2


def test_failed_verdict_exits_one(capsys):
    # the q's are not a regular sequence when k < n
    code, out = run_cli(capsys, "koszul", "--model", "q", "--n", "3",
                        "--k", "1", "--max-degree", "4")
    assert code == 1
    doc = json.loads(out)
    assert any(not v["pass"] for v in doc["verdicts"])
    # the document is still emitted, tables included
    assert doc["tables"]


def test_invalid_arguments_exit_two(capsys):
    assert run_cli(capsys, "cohom", "--n", "99")[0] == 2
    assert run_cli(capsys, "cohom", "--n", "2", "--buffer", "3")[0] == 2
    assert run_cli(capsys, "cohom", "--n", "2", "--ell", "5")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command"])
    assert exc.value.code == 2


def test_resource_cap_exits_three(capsys):
    try:
        code, out = run_cli(capsys, "cohom", "--n", "3", "--k", "2",
                            "--ell", "2", "--max-degree", "6",
                            "--max-entries", "50")
        assert code == 3
        doc = json.loads(out)
        (verdict,) = doc["verdicts"]
        assert not verdict["pass"] and "cap" in verdict["detail"]
    finally:
        os.environ.pop("WEILCOH_MAX_ENTRIES", None)


def test_determinism_modulo_timing(capsys):
    argv = ["verify", "--suite", "closedness", "--seed", "11", "--n", "2",
            "--k", "2"]
    code1, out1 = run_cli(capsys, *argv)
    code2, out2 = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 != out2  # the timing field moved
    assert strip_timing(out1) == strip_timing(out2)
