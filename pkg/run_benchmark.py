#!/usr/bin/env python3
"""
Benchmark runner for the projection-splitting solvers.

Example:
    python run_benchmark.py --example 1 --n 5 --m 10 --algorithm both --seed 7
    python run_benchmark.py --table 2 --seed 7
"""

import sys
import os
import argparse
import logging

# Add the project directory to the path
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from benchmark.run_config import ALGORITHM_CHOICES, RunConfig
from benchmark.runner import exit_status, run_benchmark, run_table
from benchmark.report import format_grid_table, format_statistics, format_table
from core.errors import SplittingError

logger = logging.getLogger("run_benchmark")


def parse_args(argv=None):
    parser = argparse.ArgumentParser(description="Projection-splitting benchmark for systems of monotone inclusions")
    parser.add_argument("--config", type=str, default="default", help="Configuration name under config/")
    parser.add_argument("--example", type=int, choices=(1, 2), help="Experiment family")
    parser.add_argument("--algorithm", choices=ALGORITHM_CHOICES, help="Algorithm(s) to run")
    parser.add_argument("--n", type=int, help="Dimension")
    parser.add_argument("--m", type=int, help="Number of system components")
    parser.add_argument("--l", type=int, help="Constraint rows of C")
    parser.add_argument("--seed", type=int, help="Instance seed")
    parser.add_argument("--scale", type=float, help="Entry scale of the random matrices")
    parser.add_argument("--delta", type=float, help="Sufficient-slope constant")
    parser.add_argument("--theta", type=float, help="Line-search ratio")
    parser.add_argument("--beta", type=float, help="Constant step size")
    parser.add_argument("--R", type=float, help="Selection radius")
    parser.add_argument("--tol-dist", dest="tol_dist", type=float, help="Stop radius around the solution 0")
    parser.add_argument("--k-max", dest="k_max", type=int, help="Outer-iteration cap")
    parser.add_argument("--j-max", dest="j_max", type=int, help="Inner-loop cap")
    parser.add_argument("--eps-res", dest="eps_res", type=float, help="Residual tolerance")
    parser.add_argument("--eps-fix", dest="eps_fix", type=float, help="Fixed-point tolerance")
    parser.add_argument("--eps-proj", dest="eps_proj", type=float, help="Projection tolerance")
    parser.add_argument("--trace-dir", dest="trace_dir", type=str, help="Directory for per-iteration trace CSVs")
    parser.add_argument("--trace-stride", dest="trace_stride", type=int, help="Keep every N-th iteration in traces")
    parser.add_argument("--report-csv", dest="report_csv", type=str, help="Also write the report as CSV")
    parser.add_argument("--workers", type=int, help="Threads inside one parallel iteration")
    parser.add_argument("--instance-in", dest="instance_in", type=str, help="Load the instance from a JSON document")
    parser.add_argument("--instance-out", dest="instance_out", type=str, help="Write the instance JSON document")
    parser.add_argument("--golden-out", dest="golden_out", type=str, help="Write iter/nT/outcome as a golden JSON file")
    parser.add_argument("--table", type=int, choices=(1, 2), help="Sweep the (n, m) rows of result table 1 or 2")
    parser.add_argument("--stats", action="store_true", help="Also print trace statistics per run")
    parser.add_argument("--verbose", action="store_true", help="Debug logging")
    return parser.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        cfg = RunConfig.from_args(args)
        if cfg.table is not None:
            grid_rows = run_table(cfg)
            rows = [row for grid_row in grid_rows for row in grid_row.rows]
        else:
            rows = run_benchmark(cfg)
    except (SplittingError, OSError) as err:
        logger.error("benchmark aborted: %s", err)
        print(f"Error: {err}", file=sys.stderr)
        return 1

    print(format_grid_table(grid_rows, cfg.algorithms) if cfg.table is not None else format_table(rows))
    if args.stats:
        print()
        print(format_statistics(rows))
    for row in rows:
        if not row.converged:
            print(f"Warning: {row.algorithm} (n={row.n}, m={row.m}) ended with {row.outcome}", file=sys.stderr)
    return exit_status(rows)


if __name__ == "__main__":
    sys.exit(main())
