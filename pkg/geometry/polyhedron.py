"""
Polyhedra {x : A x <= b} and the projection machinery built on Hildreth sweeps.
"""

import logging

import numpy as np
from scipy.optimize import linprog

from core.errors import ContractViolation
from core.operators import as_point
from geometry.halfspace import project_halfspace
from geometry.hildreth import DEFAULT_MAX_SWEEPS, DEFAULT_TOL, hildreth_project

logger = logging.getLogger(__name__)

WITNESS_TOL = 1e-10


class Polyhedron:
    """
    Polyhedron in H-representation with a stored feasible witness.

    Fields:
      - `A`: l x n matrix of constraint normals
      - `b`: offsets of length l
      - `witness`: a point w with A w <= b + WITNESS_TOL
    """

    def __init__(self, A, b, witness=None):
        """
        Initialize the polyhedron.

        Args:
            A (array_like): l x n constraint matrix, l >= 1
            b (array_like): Right-hand side of length l
            witness (array_like): Optional feasible point; found by LP when omitted

        Raises:
            ContractViolation: If shapes disagree or no feasible point exists
        """
        self.A = np.atleast_2d(np.asarray(A, dtype=float))
        self.b = np.asarray(b, dtype=float).ravel()
        if self.A.shape[0] < 1 or self.A.shape[0] != self.b.shape[0]:
            raise ContractViolation(f"polyhedron needs l >= 1 matching rows, got A {self.A.shape}, b {self.b.shape}")
        if not (np.all(np.isfinite(self.A)) and np.all(np.isfinite(self.b))):
            raise ContractViolation("polyhedron data must be finite")

        if witness is None:
            witness = self._find_witness()
        witness = as_point(witness, self.dimension, "witness")
        if self.max_violation(witness) > WITNESS_TOL:
            raise ContractViolation("witness point violates the polyhedron constraints")
        self.witness = witness

    @classmethod
    def box(cls, lower, upper):
        """
        Axis-aligned box lower <= x <= upper.

        Args:
            lower (array_like): Lower bounds
            upper (array_like): Upper bounds

        Returns:
            Polyhedron: The box
        """
        lower = np.asarray(lower, dtype=float)
        upper = np.asarray(upper, dtype=float)
        if lower.shape != upper.shape or np.any(lower > upper):
            raise ContractViolation("box bounds must share a shape and satisfy lower <= upper")
        n = lower.shape[0]
        A = np.vstack([np.eye(n), -np.eye(n)])
        b = np.concatenate([upper, -lower])
        return cls(A, b, witness=np.clip(np.zeros(n), lower, upper))

    @property
    def dimension(self):
        return self.A.shape[1]

    @property
    def rows(self):
        return self.A.shape[0]

    def max_violation(self, y):
        """Largest entry of A y - b (nonpositive inside)."""
        return float(np.max(self.A @ np.asarray(y, dtype=float) - self.b))

    def contains(self, y, tol=1e-8):
        """Check A y <= b + tol componentwise."""
        return self.max_violation(y) <= tol

    def _find_witness(self):
        """Look for a feasible point: origin first, then LP feasibility problems."""
        origin = np.zeros(self.dimension)
        if self.max_violation(origin) <= WITNESS_TOL:
            return origin

        # Tightened right-hand side keeps the LP answer inside despite solver tolerances
        for margin in (1e-6, 0.0):
            result = linprog(
                c=np.zeros(self.dimension),
                A_ub=self.A,
                b_ub=self.b - margin,
                bounds=[(None, None)] * self.dimension,
                method="highs",
            )
            if result.status == 0 and self.max_violation(result.x) <= WITNESS_TOL:
                return result.x
        raise ContractViolation("polyhedron is empty or no witness could be certified; pass one explicitly")

    def __contains__(self, point):
        return self.contains(point)

    def __str__(self):
        return f"Polyhedron(l={self.rows}, n={self.dimension})"


def project_polyhedron(x, polyhedron, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """
    Euclidean projection onto a polyhedron.

    Args:
        x (array_like): Point to project
        polyhedron (Polyhedron): Target set
        tol (float): Projection tolerance
        max_sweeps (int): Hildreth sweep cap

    Returns:
        numpy.ndarray: y with A y <= b + tol, within tol of the exact projection
    """
    x = as_point(x, polyhedron.dimension)
    y, sweeps = hildreth_project(x, polyhedron.A, polyhedron.b, tol, max_sweeps)
    logger.debug("project_polyhedron: %d sweeps over %d rows", sweeps, polyhedron.rows)
    return y


def project_intersection(x, halfspaces, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS):
    """
    Euclidean projection onto an intersection of halfspaces.

    Degenerate halfspaces are dropped; a single remaining halfspace uses the
    closed form, an empty list returns x.

    Args:
        x (array_like): Point to project
        halfspaces (list): Halfspace objects
        tol (float): Projection tolerance
        max_sweeps (int): Hildreth sweep cap

    Returns:
        numpy.ndarray: Projection of x onto the intersection
    """
    x = as_point(x)
    live = [hs for hs in halfspaces if not hs.degenerate]
    if not live:
        return x.copy()
    if len(live) == 1:
        return project_halfspace(x, live[0])

    rows = [hs.offset_form() for hs in live]
    G = np.vstack([normal for normal, _ in rows])
    h = np.array([offset for _, offset in rows])
    y, sweeps = hildreth_project(x, G, h, tol, max_sweeps)
    logger.debug("project_intersection: %d sweeps over %d halfspaces", sweeps, len(live))
    return y
