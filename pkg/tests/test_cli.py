import json

import pytest

from lcif2.cli import main
from lcif2.datasets import data_dir

KARATE = str(data_dir() / "karate.gml")


def run(*argv):
    return main([str(a) for a in argv])


def test_detect_writes_partition_and_report(tmp_path):
    out, rep = tmp_path / "p.tsv", tmp_path / "r.json"
    assert run("detect", "--input", KARATE, "--seed", 42, "--output", out, "--report", rep) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 34 and {l.split("\t")[1] for l in lines} == {"0", "1"}
    report = json.loads(rep.read_text())
    assert report["n_communities"] == 2
    assert sorted(report["central_nodes"]) == sorted(["1", "2", "3", "33", "34"])
    for key in ("f2", "restart_index", "residual_nodes", "residual_paths", "per_restart_scores"):
        assert key in report


def test_centrality_table(tmp_path, capsys):
    assert run("centrality", "--input", KARATE) == 0
    rows = [l.split("\t") for l in capsys.readouterr().out.splitlines()]
    assert len(rows) == 34
    central = {r[0] for r in rows if r[2] == "1"}
    assert central == {"1", "2", "3", "33", "34"}
    assert run("centrality", "--input", KARATE, "--indicator", "gmd") == 1
    assert run("centrality", "--input", KARATE, "--indicator", "gmd", "--k", 2) == 0


def test_gen_eval_score_round_trip(tmp_path, capsys):
    g, t, d = tmp_path / "g.txt", tmp_path / "t.tsv", tmp_path / "d.tsv"
    assert run("gen", "pq", "--p", 6, "--q", 3, "--out", g, "--truth", t) == 0
    assert run("detect", "--input", g, "--output", d) == 0
    assert run("eval", "--detected", d, "--reference", t) == 0
    result = json.loads(capsys.readouterr().out)
    assert result["nmi"] == 1.0 and result["c_r"] == 4 and result["c_f"] == 4
    assert run("score", "--input", g, "--partition", t) == 0
    scores = json.loads(capsys.readouterr().out)
    assert scores["f2"]["value"] == pytest.approx(2.8880, abs=5e-5)
    assert set(scores) == {"q", "r", "m", "f", "f2"}


@pytest.mark.parametrize("argv", [
    ["ring-cliques", "--l", 4, "--p", 3],
    ["bridge", "--a", 6, "--b", 4],
    ["well-connected"],
    ["er", "--n", 30, "--p", 0.2, "--seed", 1],
    ["complete", "--n", 5],
    ["lfr", "--n", 200, "--mu", 0.2, "--s-max", 60, "--seed", 3],
])
def test_gen_families(argv, tmp_path):
    out = tmp_path / "g.txt"
    assert run("gen", *argv, "--out", out) == 0
    assert out.read_text().strip()


def test_gen_truth_without_planted_partition(tmp_path):
    assert run("gen", "complete", "--n", 4, "--out", tmp_path / "g", "--truth", tmp_path / "t") == 1


def test_usage_and_data_errors(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run("detect")
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        run("frobnicate")
    assert exc.value.code == 1
    assert run("detect", "--input", tmp_path / "missing.txt") == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n")
    assert run("detect", "--input", bad) == 2
    t = tmp_path / "t.tsv"
    t.write_text("1\t0\n2\t0\n")
    d = tmp_path / "d.tsv"
    d.write_text("1\t0\n3\t0\n")
    assert run("eval", "--detected", d, "--reference", t) == 2
    assert run("gen", "lfr", "--n", 500, "--s-min", 5, "--out", tmp_path / "x") == 2


def test_bench_commands(tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("mu_start = 0.2\nmu_stop = 0.2\nn_values = [200]\ntrials = 1\n"
                   "restarts = 2\ns_max = 60\nobjectives = [\"f2\"]\n")
    csv_out, js = tmp_path / "s.csv", tmp_path / "s.json"
    assert run("bench", "sweep", "--config", cfg, "--output", csv_out,
               "--summary", js, "--no-timing") == 0
    assert csv_out.read_text().splitlines()[0] == "objective,n,mu,trial,nmi,seconds,status"
    assert json.loads(js.read_text())[0]["trials"] == 1
    rep = tmp_path / "t1.json"
    assert run("bench", "table1", "--seed", 42, "--report", rep) == 0
    assert json.loads(rep.read_text())["karate"]["measured"]["m"] == 2
    assert run("bench", "table1", "--datasets-dir", tmp_path) == 2
