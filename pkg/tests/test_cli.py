import json
from pathlib import Path

import pytest

from isolab.cli import main

DATA = str(Path(__file__).resolve().parents[1] / "data" / "worked_examples.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_norm(capsys):
    code, out, _ = run(capsys, "norm", DATA, "--subspace", "A", "--function", "[2, 0, 1]")
    assert code == 0
    assert json.loads(out) == {"norm": [2, 1], "suppmax": ["a"]}


def test_mset_of_map_and_subspace(capsys):
    code, out, _ = run(capsys, "mset", DATA, "--map", "T", "--query", "x,y", "--query", "x")
    assert code == 0
    data = json.loads(out)
    assert data["m_set"] == ["x", "y"]
    assert [q["member"] for q in data["ch_members"]] == [True, False]
    code, out, _ = run(capsys, "mset", DATA, "--subspace", "B")
    assert json.loads(out)["m_set"] == ["a", "c"]


def test_mset_report_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "mset", DATA, "--subspace", "A", "--report-dir", str(tmp_path))
    assert code == 0
    rows = (tmp_path / "mset.csv").read_text().splitlines()
    assert rows[0] == "point,in_m_set,pullback"
    assert len(rows) == 4
    assert (tmp_path / "dual_ball.png").stat().st_size > 0


def test_boundary_exit_codes(capsys):
    code, out, _ = run(capsys, "boundary", DATA, "--subspace", "A", "--points", "a,b")
    assert code == 0 and json.loads(out)["boundary"] is True
    code, out, _ = run(capsys, "boundary", DATA, "--subspace", "A", "--points", "c")
    assert code == 1
    assert json.loads(out)["witness"] == [[1, 1], [-1, 1], [0, 1]]


def test_sigma(capsys):
    code, out, _ = run(capsys, "sigma", DATA, "--subspace", "C1", "--family", "[[1, 1]]")
    assert code == 0
    data = json.loads(out)
    assert data["centered"] is True
    assert len(data["extreme_members"]) == 4


def test_verify_isometry(capsys):
    code, out, _ = run(capsys, "verify-isometry", DATA, "--map", "T")
    assert code == 0
    assert json.loads(out) == {"into_isometry": True, "confidence": "exact", "onto_isometry": False}
    code, out, _ = run(capsys, "verify-isometry", DATA, "--map", "S")
    assert json.loads(out)["onto_isometry"] is True


def test_verify_isometry_failure(capsys, tmp_path):
    doc = json.loads(Path(DATA).read_text())
    doc["maps"]["H"] = {"domain": "C1", "codomain": "C1", "values": [["1/2", 0], [0, 1]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify-isometry", str(path), "--map", "H")
    assert code == 1
    data = json.loads(out)
    assert data["witness"] == [[1, 1], [0, 1]]
    assert data["norm_f"] == [1, 1] and data["norm_Tf"] == [1, 2]
    code, _, err = run(capsys, "decompose", str(path), "--map", "H")
    assert code == 2 and "not an into-isometry" in err


def test_decompose_with_beta(capsys):
    code, out, _ = run(capsys, "decompose", DATA, "--map", "T", "--beta")
    assert code == 0
    data = json.loads(out)
    assert data["on"] == ["x", "y"]
    assert data["phi"] == {"x": [1, 1], "y": [-1, 1]}
    assert data["tau"] == {"x": "a", "y": "b"}
    assert data["alpha"] is True and data["beta"] is False
    assert data["beta_by_point"] == {"x": "true", "y": "true", "z": "false"}


def test_compose_and_invert(capsys):
    code, out, _ = run(capsys, "compose", DATA, "--first", "S", "--second", "T2")
    assert code == 0
    data = json.loads(out)
    assert data["tau"] == {"x": "b", "y": "a", "z": "a"}
    assert data["phi"] == {"x": [1, 1], "y": [-1, 1], "z": [1, 1]}
    code, out, _ = run(capsys, "invert", DATA, "--map", "S")
    assert json.loads(out)["phi"] == {"a": [-1, 1], "b": [1, 1]}
    code, _, _ = run(capsys, "invert", DATA, "--map", "T")
    assert code == 2


def test_suite_writes_reports(capsys, tmp_path):
    code, out, _ = run(
        capsys, "suite", "C7.2-vacuity", "--trials", "5", "--seed", "5", "--report-dir", str(tmp_path)
    )
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "pass" and data["note"] == "hypothesis never satisfiable on finite models"
    assert (tmp_path / "suite_C7.2-vacuity.csv").read_text().startswith("suite,status,trials")
    assert (tmp_path / "suite_C7.2-vacuity.png").exists()


def test_suite_failure_writes_counterexample(capsys, tmp_path, monkeypatch):
    from isolab.harness.generate import SMALL
    from isolab.harness.suites import SUITES, Suite, expect

    def never(inst, rng):
        expect(False, "planted")

    monkeypatch.setitem(SUITES, "PLANT", Suite("PLANT", "random_subspace", SMALL, never, ""))
    code, _, err = run(capsys, "suite", "PLANT", "--trials", "2", "--counterexample-dir", str(tmp_path))
    assert code == 1
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == 2
    assert str(files[0]) in err
    main(["mset", str(files[0])])


def test_gen(capsys, tmp_path):
    out_file = tmp_path / "inst.json"
    code, _, _ = run(capsys, "gen", "--kind", "isometry_pair", "--seed", "4", "--out", str(out_file))
    assert code == 0
    code, out, _ = run(capsys, "decompose", str(out_file))
    assert code == 0 and "tau" in json.loads(out)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["suite", "T9.9", "--trials", "1"],
        ["norm", "/nonexistent.json", "--function", "[1]"],
        ["norm", DATA, "--subspace", "A", "--function", "[1, 0, 0]"],
        ["norm", DATA, "--subspace", "A", "--function", "[0.5, 0, 0]"],
        ["gen", "--max-points", "12"],
        ["mset", DATA],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
