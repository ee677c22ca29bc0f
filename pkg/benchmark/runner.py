"""
Benchmark harness: build the instance, run the requested algorithms from
x0 = (1, ..., 1) and collect report rows.
"""

import logging
import os

import numpy as np

from benchmark.report import GridRow, ReportRow, write_golden, write_report_csv
from benchmark.trace_io import emit_trace
from problems.generators import RandomSpec, generate
from problems.serialization import load_instance, save_instance
from solvers import ALGORITHMS

logger = logging.getLogger(__name__)

# (n, m) rows of result tables 1 and 2; table t runs example t
TABLE_GRIDS = {
    1: ((2, 10), (5, 10), (10, 10), (2, 20), (5, 20), (10, 20), (20, 30), (30, 30), (50, 30)),
    2: ((5, 10), (20, 10), (50, 10), (5, 20), (20, 20), (50, 20)),
}


def build_instance(cfg):
    """
    Instance of a run: loaded from cfg.instance_in or generated from the seed.

    Returns:
        tuple: (example, RandomSpec, InclusionSystem)
    """
    if cfg.instance_in:
        document, system = load_instance(cfg.instance_in)
        spec = system.metadata["spec"]
        return int(document["example"]), spec, system

    spec = RandomSpec(cfg.n, cfg.m, cfg.l, cfg.seed, cfg.scale)
    example = int(cfg.example)
    if cfg.instance_out:
        save_instance(cfg.instance_out, example, spec)
    return example, spec, generate(example, spec)


def run_benchmark(cfg):
    """
    Run every requested algorithm on the same instance.

    Args:
        cfg (RunConfig): Run configuration

    Returns:
        list: ReportRow per algorithm, in the order parallel, cyclic
    """
    example, spec, system = build_instance(cfg)
    solver_cfg = cfg.solver_config(spec.n)
    x0 = np.ones(spec.n)
    logger.info("benchmark %s on %s", cfg, system)

    rows = []
    for name in cfg.algorithms:
        trace = ALGORITHMS[name](system, x0, solver_cfg)
        rows.append(ReportRow(name, example, spec.n, spec.m, spec.seed, trace))
        if cfg.trace_dir:
            os.makedirs(cfg.trace_dir, exist_ok=True)
            path = os.path.join(cfg.trace_dir, f"trace_ex{example}_n{spec.n}_m{spec.m}_s{spec.seed}_{name}.csv")
            emit_trace(trace, path)

    if cfg.report_csv:
        write_report_csv(rows, cfg.report_csv)
    if cfg.golden_out:
        write_golden(rows, cfg.golden_out)
    return rows


def exit_status(rows):
    """0 when every row converged, 1 otherwise."""
    return 0 if rows and all(row.converged for row in rows) else 1


def run_table(cfg, grid=None):
    """
    Sweep the (n, m) rows of a result table on one seed.

    Args:
        cfg (RunConfig): Run configuration with cfg.table set
        grid (sequence): Optional (n, m) pairs replacing TABLE_GRIDS[cfg.table]

    Returns:
        list: GridRow per (n, m), in grid order
    """
    table = int(cfg.table)
    grid = TABLE_GRIDS[table] if grid is None else grid
    logger.info("table %d over %d (n, m) rows, seed %s", table, len(grid), cfg.seed)

    grid_rows = []
    for n, m in grid:
        point = cfg.replace(example=table, n=n, m=m, table=None, report_csv=None)
        grid_rows.append(GridRow(n, m, run_benchmark(point)))

    if cfg.report_csv:
        write_report_csv([row for grid_row in grid_rows for row in grid_row.rows], cfg.report_csv)
    return grid_rows
