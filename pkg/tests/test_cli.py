import json

import pytest

from mmcc.bench import records_from_csv
from mmcc.cli import main

from conftest import FIG_A_EDGES, FIG_B_EDGES


@pytest.fixture
def graph_file(tmp_path):
    def make(edges, name="g.edges"):
        path = tmp_path / name
        path.write_text("".join(f"{u + 100} {v + 100}\n" for u, v in edges))
        return str(path)
    return make


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_parse(capsys, graph_file, tmp_path):
    code, out = run(capsys, "parse", graph_file(FIG_A_EDGES), "--mapping", tmp_path / "map.tsv")
    assert code == 0
    assert json.loads(out) == {"n": 7, "m": 9, "max_degree": 5, "self_loops_dropped": 0}
    assert (tmp_path / "map.tsv").read_text().splitlines()[0] == "100\t0"


def test_clb(capsys, graph_file, tmp_path):
    code, out = run(capsys, "clb", graph_file(FIG_A_EDGES), "--out", tmp_path / "pi.tsv", "--scan")
    res = json.loads(out)
    assert code == 0 and res["d"] == 3
    assert res["witness"] == 104 and res["witness_bound"] == 3
    assert len((tmp_path / "pi.tsv").read_text().splitlines()) == 7
    _, out = run(capsys, "clb", graph_file(FIG_B_EDGES, "b.edges"))
    assert json.loads(out)["d"] == 1


def test_approx4(capsys, graph_file, tmp_path):
    code, out = run(capsys, "approx4", graph_file(FIG_A_EDGES), "--out", tmp_path / "p.tsv")
    assert json.loads(out) == {"phi": 5, "iterations": 1, "terminated_early": True}
    lines = (tmp_path / "p.tsv").read_text().splitlines()
    assert lines[0] == "100\t0" and lines[-1] == "106\t6"


def test_greedy(capsys, graph_file):
    path = graph_file([(0, 1), (1, 2)])
    _, out = run(capsys, "greedy", path, "--dc4", "base")
    res = json.loads(out)
    assert res["phi"] == 1 and res["joins_performed"] == 2
    assert res["choices"]["dc4"] == "base" and res["discard_against"] == "worst"
    _, out = run(capsys, "greedy", path, "--dc4", "base", "--discard-against", "neighbor")
    assert json.loads(out)["discard_against"] == "neighbor"
    _, out = run(capsys, "greedy", path, "--named", "A")
    assert json.loads(out)["joins_performed"] == 1
    _, out = run(capsys, "greedy", path, "--all")
    res = json.loads(out)
    assert res["phi"] == 1 and res["wall_time_ms"] >= 0


def test_exact(capsys, graph_file, tmp_path):
    code, out = run(capsys, "exact", graph_file(FIG_B_EDGES), "--out", tmp_path / "w.tsv")
    assert json.loads(out) == {"opt": 2, "witness_file": str(tmp_path / "w.tsv"), "bell_n": 203}
    code = main(["exact", graph_file(FIG_B_EDGES), "--limit", "5"])
    assert code == 1
    assert "Bell(6)" in capsys.readouterr().err


def test_synth_then_bench(capsys, tmp_path):
    out_file = tmp_path / "s.edges"
    code, out = run(capsys, "synth", "--flips", "0", "--seed", "3", "--out", out_file)
    assert code == 0 and json.loads(out)["m"] == 450
    code, out = run(capsys, "bench", out_file, tmp_path / "nope.edges", "--all-variants")
    assert code == 0
    recs = records_from_csv(out)
    assert (recs[0].clb, recs[0].phi_A, recs[0].phi_A_star) == (0, 0, 0)
    assert recs[1].error is not None


def test_sweep_json(capsys, tmp_path):
    code, _ = run(capsys, "sweep", "--flips", "0,20", "--repeats", "2", "--format", "json",
                  "--out", tmp_path / "s.json", "--skip-clb")
    rows = json.loads((tmp_path / "s.json").read_text())
    assert code == 0 and len(rows) == 4 and rows[0]["clb"] is None


def test_fatal_error_exit_code(capsys, tmp_path):
    assert main(["parse", str(tmp_path / "missing")]) == 1
