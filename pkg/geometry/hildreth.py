"""
Hildreth's dual coordinate ascent for least-distance problems.

Solves  min ||y - x||^2  subject to  G y <= h  by cyclic sweeps over the rows,
keeping y = x - G^T lam with nonnegative multipliers lam. Started from
lam = 0, every iterate is at least as close as x to each feasible point.
"""

import logging

import numpy as np

from core.errors import ContractViolation, ConvergenceFailure

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-8
DEFAULT_MAX_SWEEPS = 100000

# Rows with a smaller squared norm carry no constraint.
ZERO_ROW = 1e-28


def complementarity_gap(lam, slack, row_sq, row_norm):
    """
    Largest move a single row update would still make on a row that is
    slack but carries a positive multiplier. Zero exactly at a KKT point
    of the least-distance problem.
    """
    inactive = np.maximum(slack, 0.0)
    moves = np.minimum(lam, inactive / row_sq) * row_norm
    return float(np.max(moves)) if moves.size else 0.0


def hildreth_project(x, G, h, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """
    Project x onto {y : G y <= h}.

    Sweeps stop once a full sweep moves y by at most tol/10, the largest
    row violation is at most tol/10, and no slack row with a positive
    multiplier is left (see complementarity_gap).

    Args:
        x (numpy.ndarray): Point to project
        G (numpy.ndarray): l x n constraint matrix
        h (numpy.ndarray): Right-hand side of length l
        tol (float): Projection tolerance
        max_sweeps (int): Sweep cap

    Returns:
        tuple: (projected point, number of sweeps used)

    Raises:
        ConvergenceFailure: If max_sweeps is exhausted
    """
    if not tol > 0:
        raise ContractViolation(f"projection tolerance must be positive, got {tol}")
    G = np.atleast_2d(np.asarray(G, dtype=float))
    h = np.asarray(h, dtype=float).ravel()
    y = np.array(x, dtype=float)

    row_sq = np.einsum("ij,ij->i", G, G)
    live = row_sq > ZERO_ROW
    if np.any(h[~live] < 0):
        raise ContractViolation("constraint row 0 <= h with negative h is infeasible")
    G, h, row_sq = G[live], h[live], row_sq[live]
    if G.shape[0] == 0:
        return y, 0

    stop = tol / 10.0
    if np.max(G @ y - h) <= stop:
        return y, 0

    lam = np.zeros(G.shape[0])
    row_norm = np.sqrt(row_sq)
    displacement = np.inf
    for sweep in range(1, max_sweeps + 1):
        y_start = y.copy()
        for j in range(G.shape[0]):
            updated = max(0.0, lam[j] + (G[j] @ y - h[j]) / row_sq[j])
            change = updated - lam[j]
            if change != 0.0:
                y -= change * G[j]
                lam[j] = updated
        displacement = float(np.linalg.norm(y - y_start))
        if displacement > stop:
            continue
        slack = h - G @ y
        if np.max(-slack) <= stop and complementarity_gap(lam, slack, row_sq, row_norm) <= stop:
            logger.debug("hildreth: converged after %d sweeps", sweep)
            return y, sweep

    raise ConvergenceFailure(
        f"Hildreth projection did not converge in {max_sweeps} sweeps "
        f"(last displacement {displacement:.3e})",
        last_iterate=y,
        displacement=displacement,
    )
