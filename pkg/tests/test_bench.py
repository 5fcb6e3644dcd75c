import pytest

from lcif2.bench import (SweepSpec, load_sweep_spec, run_sweep, run_table1, sweep_csv,
                         sweep_summary)
from lcif2.detect import DetectionConfig
from lcif2.synth import LfrParams

SMALL = """
# tiny sweep
mu_start = 0.1
mu_stop = 0.3
mu_step = 0.1
n_values = [200]
trials = 2
objectives = ["f2", "q"]
seed = 7
restarts = 3
s_min = 20
s_max = 60
"""


def test_spec_parsing():
    spec = load_sweep_spec(SMALL)
    assert spec.mu_grid == [0.1, 0.2, 0.3]
    assert spec.n_values == (200,)
    assert spec.objectives == ("f2", "q")
    assert spec.lfr.s_max == 60 and spec.lfr.avg_k == 20


def test_spec_errors():
    with pytest.raises(ValueError, match="unknown key"):
        load_sweep_spec("bogus = 1\n")
    with pytest.raises(ValueError):
        load_sweep_spec("trials = 0\n")
    with pytest.raises(ValueError):
        load_sweep_spec("mu_stop = 1.0\n")


def test_default_grid():
    grid = SweepSpec().mu_grid
    assert grid[0] == 0.05 and grid[-1] == 0.75 and len(grid) == 15


def test_sweep_is_reproducible():
    spec = load_sweep_spec(SMALL)
    a = sweep_csv(run_sweep(spec, timing=False))
    b = sweep_csv(run_sweep(spec, timing=False))
    assert a == b
    lines = a.splitlines()
    assert lines[0] == "objective,n,mu,trial,nmi,seconds,status"
    assert len(lines) == 1 + 3 * 2 * 2
    for line in lines[1:]:
        value = float(line.split(",")[4])
        assert 0 <= value <= 1


def test_objectives_share_graphs():
    # with identical objectives the rows must coincide, graph and all
    spec = SweepSpec(mu_start=0.2, mu_stop=0.2, n_values=(200,), trials=1,
                     objectives=("f2", "f"), restarts=1,
                     lfr=LfrParams(n=200, s_min=20, s_max=60))
    rows = run_sweep(spec, timing=True)
    assert [r.objective for r in rows] == ["f2", "f"]
    assert all(r.seconds is not None and r.seconds >= 0 for r in rows)


def test_failed_points_are_flagged():
    spec = SweepSpec(mu_start=0.1, mu_stop=0.1, n_values=(60,), trials=1,
                     lfr=LfrParams(n=500))
    rows = run_sweep(spec)
    assert rows[0].nmi is None and rows[0].status.startswith("lfr-failed")
    summary = sweep_summary(rows)
    assert summary[0]["failed"] == 1 and summary[0]["mean_nmi"] is None


def test_summary():
    spec = load_sweep_spec(SMALL)
    summary = sweep_summary(run_sweep(spec, timing=False))
    assert len(summary) == 6
    assert all(s["trials"] == 2 and 0 <= s["mean_nmi"] <= 1 for s in summary)


def test_table1_structure():
    report = run_table1(config=DetectionConfig(seed=42))
    assert set(report) == {"karate", "dolphins", "football"}
    karate = report["karate"]
    assert karate["measured"]["N"] == 34 and karate["measured"]["L"] == 78
    assert all(karate["pass"].values())
    for name in ("dolphins", "football"):
        checks = report[name]["pass"]
        assert checks["N"] and checks["L"] and checks["mean_k"]


def test_table1_missing_files(tmp_path):
    with pytest.raises(FileNotFoundError, match="karate"):
        run_table1(tmp_path)
