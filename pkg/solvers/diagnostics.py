"""
Statistics and invariant checks over iteration traces.
"""

import numpy as np

COLUMNS = ("res_max", "step_norm", "fejer_dist", "alphas_min", "nT_cum", "a_evals", "resolvent_evals")


def get_history(trace, column, window=None):
    """
    Get the recorded values of a per-iteration quantity.

    Args:
        trace (IterationTrace): Trace to read
        column (str): One of COLUMNS
        window (int): Optional number of trailing records

    Returns:
        list: Values in record order, NaN entries dropped
    """
    if column not in COLUMNS:
        raise KeyError(f"unknown trace column {column!r}")
    values = [float(getattr(record, column)) for record in trace.records]
    values = [value for value in values if not np.isnan(value)]
    if window is not None and window < len(values):
        values = values[-window:]
    return values


def calculate_statistics(trace, column, window=None):
    """
    Summary statistics of a per-iteration quantity.

    Returns:
        dict: mean, median, min, max and std (None when nothing was recorded)
    """
    values = get_history(trace, column, window)
    if not values:
        return {"mean": None, "median": None, "min": None, "max": None, "std": None}
    return {
        "mean": float(np.mean(values)),
        "median": float(np.median(values)),
        "min": float(np.min(values)),
        "max": float(np.max(values)),
        "std": float(np.std(values)),
    }


def fejer_violations(trace, slack=1e-9):
    """
    Iterations where the distance to the known solution grew by more than slack.

    Returns:
        list: k of each record whose successor is farther from the solution
    """
    pairs = zip(trace.records, trace.records[1:])
    return [a.k for a, b in pairs if b.fejer_dist > a.fejer_dist + slack]


def separation_violations(trace, solution, slack=1e-9):
    """
    Halfspaces that fail to contain a known solution.

    Returns:
        list: (k, component, <g, solution - xbar>) for every violation
    """
    solution = np.asarray(solution, dtype=float)
    found = []
    for record in trace.records:
        for i, halfspace in record.halfspaces.items():
            value = halfspace.violation(solution)
            if not halfspace.degenerate and value > slack:
                found.append((record.k, i, value))
    return found


def descent_bound_violations(trace, slack=1e-12):
    """
    Projection steps breaking <A(xbar)+ubar, x-xbar> >= alpha*delta/beta_max*||x-J||^2.

    Returns:
        list: (k, component, slack value)
    """
    return [
        (record.k, i, value)
        for record in trace.records
        for i, value in record.bound_slacks.items()
        if value < -slack
    ]


def steps_vanish(trace, fraction=0.1):
    """
    Check that late steps are no longer than early ones.

    Compares the median step norm over the last `fraction` of projection
    steps with the median over the first `fraction`.

    Returns:
        bool: True when the late median is not larger
    """
    steps = get_history(trace, "step_norm")
    if len(steps) < 2:
        return True
    width = max(1, int(len(steps) * fraction))
    return float(np.median(steps[-width:])) <= float(np.median(steps[:width]))
