"""
Exact least-distance projection by enumerating active constraint sets.

Exponential in the number of rows; meant for cross-checking the iterative
projections on small instances (a handful of rows, n <= 3).
"""

import itertools

import numpy as np
from scipy.linalg import lstsq

from core.errors import ContractViolation


def project_by_enumeration(x, G, h, feas_tol=1e-9):
    """
    Project x onto {y : G y <= h} by trying every subset of active rows.

    For each subset S the equality-constrained problem G_S y = h_S is solved
    in least-squares form, and the closest feasible candidate wins.

    Args:
        x (array_like): Point to project
        G (array_like): l x n constraint matrix
        h (array_like): Right-hand side
        feas_tol (float): Feasibility slack for accepting a candidate

    Returns:
        numpy.ndarray: The projection
    """
    x = np.asarray(x, dtype=float)
    G = np.atleast_2d(np.asarray(G, dtype=float))
    h = np.asarray(h, dtype=float).ravel()

    best, best_dist = None, np.inf
    for size in range(0, G.shape[0] + 1):
        for subset in itertools.combinations(range(G.shape[0]), size):
            if size == 0:
                candidate = x.copy()
            else:
                rows = G[list(subset)]
                mu = lstsq(rows @ rows.T, rows @ x - h[list(subset)])[0]
                candidate = x - rows.T @ mu
            if np.max(G @ candidate - h) <= feas_tol:
                dist = np.linalg.norm(candidate - x)
                if dist < best_dist:
                    best, best_dist = candidate, dist
    if best is None:
        raise ContractViolation("no feasible candidate found; the constraint set looks empty")
    return best


def polyhedron_oracle(x, polyhedron):
    """Enumeration projection onto a Polyhedron."""
    return project_by_enumeration(x, polyhedron.A, polyhedron.b)


def intersection_oracle(x, halfspaces):
    """Enumeration projection onto an intersection of Halfspace objects."""
    live = [hs for hs in halfspaces if not hs.degenerate]
    if not live:
        return np.asarray(x, dtype=float).copy()
    G = np.vstack([hs.normal for hs in live])
    h = np.array([hs.normal @ hs.anchor for hs in live])
    return project_by_enumeration(x, G, h)
