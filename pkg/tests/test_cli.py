import json
import subprocess
import sys

import pytest

from grouptope.cli import main


def run_cli(args):
    return main(args)


def test_vertices_counts(tmp_path, capsys):
    for group, leaves, expected in (("2", 3, 4), ("5", 3, 25), ("3", 4, 27)):
        out = tmp_path / f"v{group}_{leaves}.json"
        code = run_cli(
            ["vertices", "--group", group, "--leaves", str(leaves), "--out", str(out)]
        )
        assert code == 0
        data = json.loads(out.read_text())
        assert data["vertex_count"] == expected
        assert len(data["vertices"]) == expected
        assert data["run_config"]["command"] == "vertices"


def test_invalid_group_is_usage_error():
    with pytest.raises(SystemExit):
        run_cli(["vertices", "--group", "banana"])


def test_normality_exit_codes(tmp_path):
    out = tmp_path / "z3.json"
    assert run_cli(["normality", "--group", "3", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["verdict"] == "normal"

    out2 = tmp_path / "z6.json"
    assert run_cli(["normality", "--group", "6", "--out", str(out2)]) == 10
    data2 = json.loads(out2.read_text())
    assert data2["verdict"] == "non-normal"
    assert data2["certificate"]["degree"] == 4

    out3 = tmp_path / "z7.json"
    assert (
        run_cli(
            ["normality", "--group", "7", "--max-degree", "3", "--out", str(out3)]
        )
        == 20
    )
    assert json.loads(out3.read_text())["verdict"] == "inconclusive"


def test_verify_certificate_round_trip(tmp_path):
    out = tmp_path / "z6.json"
    run_cli(["normality", "--group", "6", "--out", str(out)])
    assert run_cli(["verify", str(out)]) == 0

    tampered = json.loads(out.read_text())
    tampered["certificate"]["membership"][0][1] = "9/7"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(tampered))
    assert run_cli(["verify", str(bad)]) == 1

    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert run_cli(["verify", str(garbage)]) == 2


def test_search_polytope_strategy(tmp_path):
    out = tmp_path / "z6w.json"
    assert (
        run_cli(["search", "--group", "6", "--strategy", "polytope", "--out", str(out)])
        == 0
    )
    data = json.loads(out.read_text())
    assert data["kind"] == "witness"
    assert data["certificate"]["degree"] == 4
    # the emitted file verifies in a fresh process
    proc = subprocess.run(
        [sys.executable, "-m", "grouptope.cli", "verify", str(out)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr


def test_search_graph_strategy(tmp_path):
    out = tmp_path / "z13w.json"
    assert (
        run_cli(["search", "--group", "13", "--strategy", "graph", "--out", str(out)])
        == 0
    )
    data = json.loads(out.read_text())
    assert data["kind"] == "h_search_result"
    assert data["certificate"]["degree"] == 6
    assert run_cli(["verify", str(out)]) == 0


def test_search_exhausted(tmp_path):
    out = tmp_path / "z3none.json"
    code = run_cli(
        [
            "search",
            "--group",
            "3",
            "--strategy",
            "graph",
            "--max-trials",
            "729",
            "--out",
            str(out),
        ]
    )
    assert code == 30
    assert json.loads(out.read_text())["kind"] == "search_exhausted"


def test_outputs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run_cli(["normality", "--group", "6", "--out", str(a)])
    run_cli(["normality", "--group", "6", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_classify_small(tmp_path):
    out = tmp_path / "cls.json"
    assert run_cli(["classify", "--max-order", "4", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    verdicts = {r["label"]: r["verdict"] for r in data["rows"]}
    assert verdicts == {
        "Z2": "normal",
        "Z3": "normal",
        "Z4": "normal",
        "Z2xZ2": "normal",
    }


def test_classify_csv(tmp_path):
    out = tmp_path / "cls.csv"
    assert (
        run_cli(
            ["classify", "--max-order", "4", "--format", "csv", "--out", str(out)]
        )
        == 0
    )
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "label,order,verdict,witness_degree,method"
    assert len(lines) == 5  # header + Z2, Z3, Z4, Z2xZ2
