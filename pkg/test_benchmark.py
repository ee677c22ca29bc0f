import csv
import json
import os
import warnings

import numpy as np
import pytest

from benchmark import runner
from benchmark.report import (REPORT_FIELDS, GridRow, ReportRow, format_grid_table, format_statistics, format_table,
                              golden_document, write_golden)
from benchmark.run_config import RunConfig
from benchmark.runner import TABLE_GRIDS, exit_status, run_benchmark, run_table
from benchmark.trace_io import TRACE_HEADER, emit_trace, load_trace, trace_rows
from core.errors import ContractViolation
from core.operators import EvaluationCounter
from run_benchmark import main
from solvers.trace import IterationTrace, Outcome

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "goldens")


def small_run(tmp_path, example=1, **overrides):
    values = {"example": example, "n": 2, "m": 10, "seed": 7, "trace_dir": str(tmp_path)}
    values.update(overrides)
    cfg = RunConfig(**values)
    return cfg, run_benchmark(cfg)


@pytest.fixture(scope="module")
def example1_rows(tmp_path_factory):
    trace_dir = tmp_path_factory.mktemp("traces")
    return trace_dir, small_run(trace_dir)[1]


class TestRunBenchmark:

    def test_both_algorithms_converge(self, example1_rows):
        _, rows = example1_rows
        assert [row.algorithm for row in rows] == ["parallel", "cyclic"]
        for row in rows:
            assert row.outcome == "Converged"
            assert 1 <= row.iter <= 10000
            assert row.nT > 0
        assert exit_status(rows) == 0

    def test_deterministic(self, tmp_path, example1_rows):
        _, rows = example1_rows
        _, again = small_run(tmp_path)
        assert [(r.iter, r.nT) for r in again] == [(r.iter, r.nT) for r in rows]

    def test_table(self, example1_rows):
        _, rows = example1_rows
        lines = format_table(rows).splitlines()
        assert len(lines) == 4
        assert "iter(nT)" in lines[0]
        assert f"{rows[0].iter}({rows[0].nT})" in lines[2]
        assert len({len(line) for line in lines}) == 1

    def test_trace_files(self, example1_rows):
        trace_dir, rows = example1_rows
        for row in rows:
            path = os.path.join(trace_dir, f"trace_ex1_n2_m10_s7_{row.algorithm}.csv")
            loaded = load_trace(path)
            np.testing.assert_equal(loaded, trace_rows(row.trace))
            assert loaded[-1]["fejer_dist"] <= 1e-3
            distances = [entry["fejer_dist"] for entry in loaded]
            assert all(b <= a + 1e-9 for a, b in zip(distances, distances[1:]))
            assert [entry["k"] for entry in loaded] == sorted(entry["k"] for entry in loaded)

    def test_report_and_golden(self, tmp_path):
        report = tmp_path / "report.csv"
        golden = tmp_path / "golden.json"
        _, rows = small_run(tmp_path, example=2, report_csv=str(report), golden_out=str(golden))
        with open(report, newline="") as file:
            read = list(csv.DictReader(file))
        assert tuple(read[0]) == REPORT_FIELDS
        assert [entry["algorithm"] for entry in read] == ["parallel", "cyclic"]
        assert int(read[1]["nT"]) == rows[1].nT
        with open(golden) as file:
            assert json.load(file) == golden_document(rows)

    @pytest.mark.parametrize("example", [1, 2])
    def test_matches_committed_golden(self, tmp_path, example, request):
        path = os.path.join(GOLDEN_DIR, f"example{example}_n2_m10_seed7.json")
        _, rows = small_run(tmp_path, example=example)
        if request.config.getoption("--update-goldens") or not os.path.exists(path):
            write_golden(rows, path)
            warnings.warn(f"golden file written to {path}; commit it")
        with open(path) as file:
            expected = json.load(file)
        assert golden_document(rows) == expected
        assert set(expected["runs"]) == {"parallel", "cyclic"}

    def test_instance_round_trip(self, tmp_path):
        instance = tmp_path / "instance.json"
        _, written = small_run(tmp_path, instance_out=str(instance))
        # The file wins over the size and seed given alongside it
        _, loaded = small_run(tmp_path, instance_in=str(instance), n=9, seed=0)
        assert [(r.n, r.seed, r.iter, r.nT) for r in loaded] == [(r.n, r.seed, r.iter, r.nT) for r in written]
        assert all(r.n == 2 and r.seed == 7 for r in loaded)

    def test_small_run_overrides_defaults(self, tmp_path):
        cfg, rows = small_run(tmp_path, n=3, seed=1, algorithm="parallel")
        assert (cfg.n, cfg.m, cfg.seed) == (3, 10, 1)
        assert rows[0].n == 3

    def test_single_algorithm(self, tmp_path):
        _, rows = small_run(tmp_path, algorithm="cyclic")
        assert [row.algorithm for row in rows] == ["cyclic"]

    def test_non_converged_exit_status(self, tmp_path):
        _, rows = small_run(tmp_path, k_max=1, algorithm="parallel")
        assert rows[0].outcome == "MaxIterations"
        assert exit_status(rows) == 1


class TestTableMode:

    def test_grids(self):
        assert len(TABLE_GRIDS[1]) == 9
        assert len(TABLE_GRIDS[2]) == 6
        assert (5, 10) in TABLE_GRIDS[1] and (5, 10) in TABLE_GRIDS[2]

    def test_sweep_uses_one_seed(self, tmp_path):
        report = tmp_path / "report.csv"
        cfg = RunConfig(table=2, seed=7, trace_dir=str(tmp_path), report_csv=str(report))
        grid_rows = run_table(cfg, grid=((2, 10), (3, 10)))
        assert [(g.n, g.m) for g in grid_rows] == [(2, 10), (3, 10)]
        for grid_row in grid_rows:
            assert sorted(grid_row.runs) == ["cyclic", "parallel"]
            assert all(row.example == 2 and row.seed == 7 for row in grid_row.rows)
        with open(report, newline="") as file:
            assert len(list(csv.DictReader(file))) == 4
        assert (tmp_path / "trace_ex2_n3_m10_s7_cyclic.csv").exists()

    def test_point_matches_single_run(self, tmp_path, example1_rows):
        _, rows = example1_rows
        grid_row = run_table(RunConfig(table=1, seed=7, trace_dir=str(tmp_path)), grid=((2, 10),))[0]
        assert [(r.iter, r.nT) for r in grid_row.rows] == [(r.iter, r.nT) for r in rows]

    def test_grid_table_layout(self, example1_rows):
        _, rows = example1_rows
        lines = format_grid_table([GridRow(2, 10, rows), GridRow(2, 10, rows[:1])]).splitlines()
        assert lines[0].split(" | ")[0].strip() == "n"
        assert "parallel iter(nT)" in lines[0] and "cyclic time [s]" in lines[0]
        cells = [cell.strip() for cell in lines[2].split(" | ")]
        assert cells[:4] == ["2", "10", f"{rows[0].iter}({rows[0].nT})", f"{rows[0].wall_time_seconds:.4f}"]
        assert lines[3].rstrip().endswith("--")
        assert len({len(line) for line in lines}) == 1

    @pytest.mark.parametrize("kwargs", [{"table": 3}, {"table": 1, "golden_out": "g.json"},
                                        {"table": 2, "instance_in": "i.json"}])
    def test_invalid(self, kwargs):
        with pytest.raises(ContractViolation):
            RunConfig(**kwargs)


class TestStatistics:

    def test_statistics_table(self, example1_rows):
        _, rows = example1_rows
        lines = format_statistics(rows, ("step_norm",)).splitlines()
        assert len(lines) == 2 + len(rows)
        cells = [cell.strip() for cell in lines[2].split(" | ")]
        assert cells[:2] == ["parallel", "step_norm"]
        steps = [r.step_norm for r in rows[0].trace.records if not np.isnan(r.step_norm)]
        assert float(cells[5]) == pytest.approx(max(steps), rel=1e-3)

    def test_empty_column_prints_dashes(self):
        trace = IterationTrace("parallel")
        trace.finish(Outcome.MAX_ITERATIONS, np.zeros(2), 0, EvaluationCounter(), 0.0, "k_max")
        row = ReportRow("parallel", 1, 2, 10, 7, trace)
        assert format_statistics([row], ("alphas_min",)).splitlines()[2].rstrip().endswith("-")


class TestTraceFiles:

    def test_empty_trace_is_header_only(self, tmp_path):
        path = tmp_path / "empty.csv"
        emit_trace(IterationTrace("parallel"), path)
        with open(path) as file:
            assert file.read().strip() == ",".join(TRACE_HEADER)
        assert load_trace(path) == []

    def test_wrong_header(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("a,b\n1,2\n")
        with pytest.raises(ValueError):
            load_trace(path)

    def test_unwritable_path(self, tmp_path):
        with pytest.raises(OSError, match="trace"):
            emit_trace(IterationTrace("parallel"), tmp_path / "missing" / "t.csv")


class TestRunConfig:

    @pytest.mark.parametrize("kwargs", [{"example": 3}, {"algorithm": "serial"}, {"tol_dist": 0.0},
                                        {"delta": 1.5}, {"k_max": 0}, {"bogus": 1}])
    def test_invalid(self, kwargs):
        with pytest.raises(ContractViolation):
            RunConfig(**kwargs)

    def test_solver_config(self):
        solver = RunConfig(n=4, beta=2.0, tol_dist=1e-4).solver_config()
        assert solver.beta_min == solver.beta_max == 2.0
        assert solver.target_radius == 1e-4
        np.testing.assert_array_equal(solver.known_solution, np.zeros(4))

    def test_algorithms(self):
        assert RunConfig().algorithms == ["parallel", "cyclic"]
        assert RunConfig(algorithm="parallel").algorithms == ["parallel"]


class TestMain:

    def test_success(self, tmp_path, capsys):
        status = main(["--example", "1", "--n", "2", "--m", "10", "--seed", "7",
                       "--trace-dir", str(tmp_path), "--report-csv", str(tmp_path / "r.csv")])
        assert status == 0
        assert "iter(nT)" in capsys.readouterr().out
        assert (tmp_path / "trace_ex1_n2_m10_s7_parallel.csv").exists()
        assert (tmp_path / "r.csv").exists()

    def test_invalid_option(self, capsys):
        assert main(["--delta", "2.0"]) == 1
        assert "Error" in capsys.readouterr().err

    def test_missing_instance(self, tmp_path):
        assert main(["--instance-in", str(tmp_path / "none.json")]) == 1

    def test_table_mode(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setitem(runner.TABLE_GRIDS, 1, ((2, 10),))
        status = main(["--table", "1", "--seed", "7", "--trace-dir", str(tmp_path), "--stats"])
        out = capsys.readouterr().out
        assert status == 0
        assert "parallel iter(nT)" in out and "cyclic time [s]" in out
        assert "step_norm" in out

    def test_table_rejects_golden_out(self, tmp_path, capsys):
        assert main(["--table", "2", "--golden-out", str(tmp_path / "g.json")]) == 1
        assert "table mode" in capsys.readouterr().err
