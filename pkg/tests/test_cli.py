import json
import os
import subprocess
import sys

import jsonschema
import pytest

from pseudoline_lab.cli import main

REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "half_period", "nontrivial", "simple", "vertex_count",
                 "multiplicity_histogram", "per_line_vertex_counts", "r_max",
                 "simple_switch_count", "rich", "credit"],
    "properties": {
        "n": {"type": "integer"},
        "half_period": {"type": "integer"},
        "nontrivial": {"type": "boolean"},
        "simple": {"type": "boolean"},
        "vertex_count": {"type": "integer"},
        "multiplicity_histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
        "per_line_vertex_counts": {"type": "array", "items": {"type": "integer"}},
        "r_max": {"type": "integer"},
        "simple_switch_count": {"type": "integer"},
        "rich": {"type": "array", "items": {
            "type": "object",
            "required": ["k", "count", "bound_k5", "bound_k8", "ok"],
            "properties": {
                "k": {"type": "integer"},
                "count": {"type": "integer"},
                "bound_k5": {"type": ["string", "null"], "pattern": r"^\d+\.\d+$"},
                "bound_k8": {"type": ["string", "null"], "pattern": r"^\d+\.\d+$"},
                "ok": {"type": "boolean"},
            },
        }},
        "credit": {"type": "object"},
    },
}


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_validate(data_dir, capsys):
    code, out = run(["validate", str(data_dir / "worked_example.seq")], capsys)
    assert code == 0
    assert out.strip() == '{"valid":true,"half_period":6}'


def test_validate_failure(tmp_path, capsys):
    f = tmp_path / "bad.seq"
    f.write_text("3\n123\n231\n321\n")
    code, out = run(["validate", str(f)], capsys)
    assert code == 1
    assert json.loads(out)["error"] == "MoveInferenceFailed"


def test_analyze(data_dir, capsys):
    code, out = run(["analyze", "--json", str(data_dir / "worked_example.seq")], capsys)
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["r_max"] == 4
    code, out = run(["analyze", str(data_dir / "worked_example.seq")], capsys)
    assert code == 0 and "r_max = 4" in out


def test_analyze_rich_out_of_range(data_dir, capsys):
    code, out = run(["analyze", "--json", "--rich", "2,9", str(data_dir / "worked_example.seq")],
                    capsys)
    assert code == 2 and json.loads(out)["error"] == "KOutOfRange"


def test_deltoid_odd(capsys):
    code, out = run(["deltoid", "--n", "7"], capsys)
    assert code == 2
    assert json.loads(out)["error"] == "OddN"


def test_deltoid_outputs(tmp_path, capsys):
    svg, seq = tmp_path / "d.svg", tmp_path / "d.seq"
    code, out = run(["deltoid", "--n", "12", "--svg", str(svg), "--seq", str(seq), "--json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert (rep["triples"], rep["doubles"]) == (19, 9)
    assert svg.read_text().startswith("<?xml")
    code, out = run(["validate", str(seq)], capsys)
    assert code == 0


def test_deltoid_degenerate(tmp_path, capsys):
    code, out = run(["deltoid", "--n", "6", "--seq", str(tmp_path / "x.seq"), "--epsilon", "1"],
                    capsys)
    assert code == 1 and json.loads(out)["error"] == "DegenerateSweep"


def test_usage_error_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["deltoid"]) == 2


def test_sweep(data_dir, tmp_path, capsys):
    out_seq = tmp_path / "t.seq"
    code, out = run(["sweep", str(data_dir / "triangle.pts"), "--stats",
                     "--emit-seq", str(out_seq)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["half_period"] == 3 == rep["direction_count"]
    assert rep["stats"]["connecting_line_count"] == 3
    assert out_seq.read_text() == "3\n1 2 3\n1 3 2\n3 1 2\n3 2 1\n"


def test_sweep_duplicate_x(tmp_path, capsys):
    f = tmp_path / "p.pts"
    f.write_text("0 0\n0 1\n1 0\n")
    code, out = run(["sweep", str(f)], capsys)
    assert code == 1 and json.loads(out)["error"] == "DuplicateX"
    code, out = run(["sweep", "--perturb", str(f)], capsys)
    assert code == 0 and json.loads(out)["half_period"] == 3


def test_construct(capsys):
    code, out = run(["construct", "longline", "--n", "4"], capsys)
    assert code == 0
    assert out.splitlines()[:3] == ["4", "1 2 3 4", "3 2 1 4"]
    code, out = run(["construct", "nearpencil", "--n", "4"], capsys)
    assert out.splitlines() == ["-1 1", "0 0", "1 0", "2 0"]


def test_enumerate(capsys):
    code, out = run(["enumerate", "--n", "4", "--check", "ungar,switch,rich,pairs"], capsys)
    rep = json.loads(out)
    assert code == 0
    assert (rep["n"], rep["mode"], rep["total"], rep["min_half_period"]) == (4, "all", 37, 4)
    assert rep["counterexamples"] == []
    code, out = run(["enumerate", "--n", "7", "--simple", "--count-only"], capsys)
    assert json.loads(out)["total"] == 1100742656
    code, out = run(["enumerate", "--n", "6"], capsys)
    assert code == 2 and json.loads(out)["error"] == "NTooLarge"


def test_render(data_dir, tmp_path, capsys):
    out = tmp_path / "w.svg"
    code, _ = run(["render", str(data_dir / "worked_example.seq"), "-o", str(out), "--labels"],
                  capsys)
    assert code == 0
    assert out.read_text().count('id="v') == 8


def test_stdin_pipe(data_dir):
    text = (data_dir / "worked_example.seq").read_text()
    r = subprocess.run([sys.executable, "-m", "pseudoline_lab", "validate", "-"],
                       input=text, capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["half_period"] == 6


def test_missing_file(capsys):
    code, out = run(["validate", "/nonexistent/x.seq"], capsys)
    assert code == 2
