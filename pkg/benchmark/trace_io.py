"""
CSV emission of iteration traces.
"""

import csv
import logging

logger = logging.getLogger(__name__)

TRACE_HEADER = ("k", "res_max", "step_norm", "fejer_dist", "alphas_min", "nT_cum")


def trace_rows(trace):
    """
    Flatten the records of a trace to CSV rows.

    Returns:
        list: dicts keyed by TRACE_HEADER
    """
    return [
        {
            "k": record.k,
            "res_max": record.res_max,
            "step_norm": record.step_norm,
            "fejer_dist": record.fejer_dist,
            "alphas_min": record.alphas_min,
            "nT_cum": record.nT_cum,
        }
        for record in trace.records
    ]


def emit_trace(trace, path):
    """
    Write a trace as CSV, one row per recorded iteration.

    Floats are written with repr so they read back bit for bit.

    Args:
        trace (IterationTrace): Trace to write
        path (str): Destination file
    """
    try:
        with open(path, "w", newline="") as file:
            writer = csv.writer(file)
            writer.writerow(TRACE_HEADER)
            for row in trace_rows(trace):
                writer.writerow([row["k"]] + [repr(float(row[key])) for key in TRACE_HEADER[1:-1]] + [row["nT_cum"]])
    except OSError as err:
        raise OSError(f"cannot write trace file {path}: {err}") from err
    logger.info("trace with %d rows written to %s", len(trace.records), path)


def load_trace(path):
    """
    Read a trace CSV written by emit_trace.

    Returns:
        list: dicts keyed by TRACE_HEADER with int k and nT_cum and float columns
    """
    try:
        with open(path, "r", newline="") as file:
            reader = csv.DictReader(file)
            if tuple(reader.fieldnames or ()) != TRACE_HEADER:
                raise ValueError(f"{path} does not have the trace header {','.join(TRACE_HEADER)}")
            return [
                {
                    "k": int(row["k"]),
                    **{key: float(row[key]) for key in TRACE_HEADER[1:-1]},
                    "nT_cum": int(row["nT_cum"]),
                }
                for row in reader
            ]
    except OSError as err:
        raise OSError(f"cannot read trace file {path}: {err}") from err
