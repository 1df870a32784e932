"""Campaign plumbing: fits, configs, determinism, and output schema."""

import json

import numpy as np
import pytest

from mstsim import ExperimentConfig, fit_loglog, run_campaign
from mstsim.experiments import (
    _collect,
    _run_tasks,
    load_config,
    run_phase_transition,
)


class TestFitLoglog:
    def test_exact_third(self):
        fit = fit_loglog([(1000, 20, 0.1), (8000, 40, 0.1), (64000, 80, 0.1)])
        assert fit.slope == pytest.approx(1 / 3, abs=1e-12)

    def test_constant_values(self):
        fit = fit_loglog([(10, 5, 0.0), (100, 5, 0.0), (1000, 5, 0.0)])
        assert fit.slope == pytest.approx(0.0, abs=1e-12)

    def test_linear_values(self):
        fit = fit_loglog([(10, 10, 0.0), (100, 100, 0.0), (1000, 1000, 0.0)])
        assert fit.slope == pytest.approx(1.0, abs=1e-12)

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            fit_loglog([(10, 1, 0.0), (100, 2, 0.0)])

    def test_non_positive_value(self):
        with pytest.raises(ValueError):
            fit_loglog([(10, 1, 0.0), (100, 0.0, 0.0), (1000, 2, 0.0)])

    def test_weighting_prefers_precise_points(self):
        # an outlier with a huge stderr should barely move the fit
        base = [(10, 10.0, 0.01), (100, 100.0, 0.1), (1000, 1000.0, 1.0)]
        noisy = base + [(10000, 1000.0, 100000.0)]
        assert fit_loglog(noisy).slope == pytest.approx(1.0, abs=0.01)


class TestConfig:
    def test_load_and_override(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text(
            "experiment = phase\n"
            "n_grid = 64,128\n"
            "replicates = 3   # small\n"
            "c_grid = 0.5,2\n"
            "\n"
            "seed = 11\n"
        )
        cfg = load_config(path)
        assert cfg.experiment == "phase"
        assert cfg.n_grid == (64, 128)
        assert cfg.replicates == 3
        cfg2 = load_config(path, replicates=9, out_dir="elsewhere")
        assert cfg2.replicates == 9 and cfg2.out_dir == "elsewhere"

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "cfg.txt"
        path.write_text("experiment = phase\nnupgrid = 1\n")
        with pytest.raises(ValueError, match="unknown config key"):
            load_config(path)

    def test_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(experiment="nope").validate()
        with pytest.raises(ValueError):
            ExperimentConfig(experiment="phase", n_grid=(100, 100)).validate()
        with pytest.raises(ValueError):
            ExperimentConfig(experiment="typical", c=0.9).validate()
        with pytest.raises(ValueError):
            ExperimentConfig(experiment="powerlaw", alpha=4.5).validate()
        with pytest.raises(ValueError):
            # f above the n^(1/4) guard
            ExperimentConfig(experiment="window", n_grid=(4096,), f_grid=(9.0,)).validate()

    def test_window_guard_accepts_valid(self):
        ExperimentConfig(experiment="window", n_grid=(1_000_000,), f_grid=(8.0,)).validate()


class TestCampaign:
    def _tiny(self, **kw):
        base = dict(
            experiment="phase",
            n_grid=(64, 128, 256),
            c_grid=(0.5, 1.0, 2.0),
            replicates=3,
            seed=7,
        )
        base.update(kw)
        return ExperimentConfig(**base)

    def test_row_count(self):
        rows = _run_tasks(self._tiny())
        # one row per (task, c)
        assert len(rows) == 3 * 3 * 3
        assert all(r[6] == "ok" for r in rows)

    def test_rows_deterministic_across_jobs(self):
        a = _run_tasks(self._tiny(jobs=1))
        b = _run_tasks(self._tiny(jobs=2))
        assert a == b

    def test_campaign_outputs(self, tmp_path):
        summary = run_campaign(self._tiny(), out_dir=tmp_path)
        raw = (tmp_path / "raw.csv").read_text()
        assert raw.splitlines()[0] == "experiment,n,replicate,seed,statistic,value,status"
        assert len(raw.splitlines()) == 1 + 27
        loaded = json.loads((tmp_path / "summary.json").read_text())
        for key in ("experiment", "n_grid", "slope", "slope_ci", "replicates", "seed"):
            assert key in loaded
        assert loaded == {**summary, "wall_clock_s": loaded["wall_clock_s"]}

    def test_campaign_bytes_reproducible(self, tmp_path):
        run_campaign(self._tiny(), out_dir=tmp_path / "a")
        run_campaign(self._tiny(), out_dir=tmp_path / "b")
        assert (tmp_path / "a/raw.csv").read_bytes() == (tmp_path / "b/raw.csv").read_bytes()

    def test_phase_table(self):
        table = run_phase_transition(self._tiny())
        assert len(table) == 9
        cs = {c for c, _, _ in table}
        assert cs == {0.5, 1.0, 2.0}
        assert all(0 < frac <= 1 for _, _, frac in table)

    def test_typical_invariants(self):
        cfg = ExperimentConfig(
            experiment="typical", n_grid=(64, 128, 256, 512), replicates=6, c=2.0, seed=3
        )
        rows = _run_tasks(cfg)
        col = _collect(rows)
        dist_by_n = {n: np.mean(v) for n, v in col["typical_distance"].items()}
        ns = sorted(dist_by_n)
        # monotone in n, tolerating one inversion at the smallest size
        increments = [dist_by_n[b] >= dist_by_n[a] for a, b in zip(ns, ns[1:])]
        assert all(increments[1:]) and sum(increments) >= len(increments) - 1
        # per replicate: typical distance cannot exceed the tree diameter
        by_rep_dist = {}
        by_rep_diam = {}
        for _, n, rep, _, statistic, value, status in rows:
            if statistic == "typical_distance":
                by_rep_dist[(n, rep)] = value
            elif statistic == "tree_diameter":
                by_rep_diam[(n, rep)] = value
        assert by_rep_dist.keys() == by_rep_diam.keys()
        for key, d in by_rep_dist.items():
            assert d <= by_rep_diam[key]

    def test_iid_variant_runs(self):
        cfg = ExperimentConfig(
            experiment="typical", n_grid=(128,), replicates=3, c=2.0, variant="iid", seed=5
        )
        rows = _run_tasks(cfg)
        assert any(r[4] == "typical_distance" and r[6] == "ok" for r in rows)

    def test_window_rows(self):
        cfg = ExperimentConfig(
            experiment="window", n_grid=(20_000,), f_grid=(2.0, 4.0), replicates=2, seed=9
        )
        rows = _run_tasks(cfg)
        stats_seen = {r[4] for r in rows}
        assert "size_ratio[f=2]" in stats_seen and "largest_surplus[f=4]" in stats_seen

    def test_selftest_passes(self, tmp_path):
        cfg = ExperimentConfig(experiment="selftest", n_grid=(64,), replicates=1, seed=1)
        summary = run_campaign(cfg, out_dir=tmp_path)
        assert summary["excluded_rows"] == 0
