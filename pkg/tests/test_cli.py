"""Tests for the command-line interface."""

import json

import pytest

from braidrefl.arrangement import ArrangementMatrix, gamma0_path
from braidrefl.cli import run
from braidrefl.exactnum import ExactNumber


@pytest.fixture()
def a3_file(tmp_path):
    path = tmp_path / "a3.json"
    path.write_text(gamma0_path([1, 1]).to_json())
    return str(path)


@pytest.fixture()
def ones_file(tmp_path):
    one, two = ExactNumber.one(), ExactNumber.from_rational(2)
    B = ArrangementMatrix(
        [[two, one, one], [one, two, one], [one, one, two]]
    )
    path = tmp_path / "ones.json"
    path.write_text(B.to_json())
    return str(path)


def test_classify_finite(capsys, ones_file):
    assert run(["classify", ones_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Finite"


def test_classify_rejects_wrong_size(capsys, tmp_path):
    path = tmp_path / "m2.json"
    path.write_text(gamma0_path([1]).to_json())
    assert run(["classify", str(path)]) == 2
    err = json.loads(capsys.readouterr().err)
    assert "error" in err


def test_charpoly_gamma0_a2(capsys, tmp_path):
    path = tmp_path / "a2.json"
    path.write_text(gamma0_path([1]).to_json())
    assert run(["charpoly", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["cyclotomic"] == [[3, 1]]


def test_orbit_report(capsys, a3_file):
    assert run(["orbit", a3_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Finite"
    assert doc["size"] == 4
    assert doc["invariants"]["det"] == "4"


def test_hurwitz_report(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"group": "A2", "reflections": [0, 1]}))
    assert run(["hurwitz", str(path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "Finite"
    assert doc["size"] == 3


def test_catalog_matrix_and_summary(capsys):
    assert run(["catalog", "A3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 3
    assert run(["catalog", "H3", "--summary"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"group": "H3", "rank": 3, "roots": 30, "reflections": 15}
    assert run(["catalog", "Q9"]) == 2
    capsys.readouterr()


def test_realize(capsys, ones_file):
    assert run(["realize", ones_file, "--kind", "unique"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dim"] == 3
    assert len(doc["reflections"]) == 3


def test_verify_pass_and_text(capsys):
    assert run(["verify", "dn-orbits", "--n", "4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert run(["verify", "dn-orbits", "--n", "4", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "D4" in out


def test_verify_unknown_suite(capsys):
    assert run(["verify", "no-such-suite"]) == 2
    err = json.loads(capsys.readouterr().err)
    assert "unknown suite" in err["error"]


def test_input_errors(capsys, tmp_path):
    assert run(["classify", str(tmp_path / "missing.json")]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["classify", str(bad)]) == 2
    capsys.readouterr()
    assert run(["orbit", str(bad)]) == 2
    capsys.readouterr()


def test_bad_flags(capsys, a3_file):
    assert run(["orbit", a3_file, "--cap", "0"]) == 2
    capsys.readouterr()
    assert run(["orbit", a3_file, "--threads", "0"]) == 2
    capsys.readouterr()


def test_out_file(tmp_path, a3_file):
    dest = tmp_path / "out.json"
    assert run(["orbit", a3_file, "--out", str(dest)]) == 0
    doc = json.loads(dest.read_text())
    assert doc["size"] == 4


def test_stdin_matrix(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(gamma0_path([1, 1]).to_json()))
    assert run(["orbit", "-"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["size"] == 4


def test_threads_flag_does_not_change_output(capsys, a3_file):
    assert run(["orbit", a3_file, "--threads", "1"]) == 0
    first = capsys.readouterr().out
    assert run(["orbit", a3_file, "--threads", "8"]) == 0
    assert capsys.readouterr().out == first
