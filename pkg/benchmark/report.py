"""
Benchmark report rows, the aligned text table, CSV output and golden files.
"""

import csv
import json
import logging

from solvers.diagnostics import calculate_statistics

logger = logging.getLogger(__name__)

REPORT_FIELDS = ("algorithm", "example", "n", "m", "seed", "iter", "nT", "wall_time_seconds", "outcome", "error")


class ReportRow:
    """One algorithm run on one instance."""

    def __init__(self, algorithm, example, n, m, seed, trace):
        self.algorithm = algorithm
        self.example = example
        self.n = n
        self.m = m
        self.seed = seed
        self.trace = trace
        self.iter = trace.iterations
        self.nT = trace.nT
        self.wall_time_seconds = trace.wall_time
        self.outcome = trace.outcome.value
        self.error = trace.error

    @property
    def converged(self):
        return self.trace.converged

    def to_dict(self):
        return {field: getattr(self, field) for field in REPORT_FIELDS}

    def __str__(self):
        return f"ReportRow({self.algorithm}, n={self.n}, m={self.m}, {self.iter}({self.nT}), {self.outcome})"


class GridRow:
    """All algorithm runs at one (n, m) of a result table."""

    def __init__(self, n, m, rows):
        self.n = n
        self.m = m
        self.rows = list(rows)
        self.runs = {row.algorithm: row for row in self.rows}

    @property
    def converged(self):
        return all(row.converged for row in self.rows)


def format_table(rows):
    """
    Render rows as an aligned text table with an iter(nT) column.

    Returns:
        str: The table
    """
    header = ("algorithm", "example", "n", "m", "seed", "iter(nT)", "time [s]", "outcome")
    body = [
        (row.algorithm, str(row.example), str(row.n), str(row.m), str(row.seed),
         f"{row.iter}({row.nT})", f"{row.wall_time_seconds:.4f}",
         row.outcome if row.error is None else f"{row.outcome} at k={row.trace.failed_iteration}: {row.error}")
        for row in rows
    ]
    return align(header, body)


def align(header, body):
    widths = [max(len(line[col]) for line in [header] + body) for col in range(len(header))]
    rule = "-+-".join("-" * width for width in widths)
    lines = [" | ".join(cell.ljust(width) for cell, width in zip(header, widths)), rule]
    lines += [" | ".join(cell.ljust(width) for cell, width in zip(line, widths)) for line in body]
    return "\n".join(lines)


def format_grid_table(grid_rows, algorithms=("parallel", "cyclic")):
    """
    Render a result table: one line per (n, m) with iter(nT) and time per algorithm.

    Runs that did not converge show their outcome after the counts.
    """
    header = ("n", "m")
    for name in algorithms:
        header += (f"{name} iter(nT)", f"{name} time [s]")
    body = []
    for grid_row in grid_rows:
        line = (str(grid_row.n), str(grid_row.m))
        for name in algorithms:
            row = grid_row.runs.get(name)
            if row is None:
                line += ("--", "--")
                continue
            counts = f"{row.iter}({row.nT})"
            if not row.converged:
                counts += f" {row.outcome}"
            line += (counts, f"{row.wall_time_seconds:.4f}")
        body.append(line)
    return align(header, body)


STATISTICS_COLUMNS = ("res_max", "step_norm", "alphas_min")


def format_statistics(rows, columns=STATISTICS_COLUMNS):
    """
    Render per-run summary statistics of trace quantities.

    Returns:
        str: Table with one line per (algorithm, quantity)
    """
    header = ("algorithm", "quantity", "mean", "median", "min", "max", "std")
    body = []
    for row in rows:
        for column in columns:
            stats = calculate_statistics(row.trace, column)
            cells = tuple("-" if stats[key] is None else f"{stats[key]:.3e}" for key in header[2:])
            body.append((row.algorithm, column) + cells)
    return align(header, body)


def write_report_csv(rows, path):
    """Write the report rows to a CSV file."""
    try:
        with open(path, "w", newline="") as file:
            writer = csv.DictWriter(file, fieldnames=REPORT_FIELDS)
            writer.writeheader()
            for row in rows:
                writer.writerow(row.to_dict())
    except OSError as err:
        raise OSError(f"cannot write report file {path}: {err}") from err
    logger.info("report with %d rows written to %s", len(rows), path)


def golden_document(rows):
    """
    Deterministic part of a report (wall time excluded).

    Returns:
        dict: {"example", "n", "m", "seed", "runs": {algorithm: {iter, nT, outcome}}}
    """
    if not rows:
        return {"runs": {}}
    first = rows[0]
    return {
        "example": first.example,
        "n": first.n,
        "m": first.m,
        "seed": first.seed,
        "runs": {row.algorithm: {"iter": row.iter, "nT": row.nT, "outcome": row.outcome} for row in rows},
    }


def write_golden(rows, path):
    """Write the golden document of a report as JSON."""
    try:
        with open(path, "w") as file:
            json.dump(golden_document(rows), file, indent=2, sort_keys=True)
            file.write("\n")
    except OSError as err:
        raise OSError(f"cannot write golden file {path}: {err}") from err
    logger.info("golden file written to %s", path)
