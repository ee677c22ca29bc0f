"""
Set-valued operators: the normal cone of a polyhedron and the zero operator.
"""

import numpy as np

from core.operators import SetValuedOperator
from geometry.hildreth import DEFAULT_MAX_SWEEPS, DEFAULT_TOL
from geometry.polyhedron import project_polyhedron


class NormalConeOperator(SetValuedOperator):
    """
    Normal cone N_C of a polyhedron C.

    The resolvent is the Euclidean projection onto C for every step size,
    and the bounded selection is the zero vector, which lies in N_C(y) for
    every y in C.
    """

    def __init__(self, polyhedron, tol=DEFAULT_TOL, max_sweeps=DEFAULT_MAX_SWEEPS, domain_tol=1e-8):
        """
        Initialize the normal cone.

        Args:
            polyhedron (Polyhedron): The set C
            tol (float): Projection tolerance of the resolvent
            max_sweeps (int): Hildreth sweep cap of the resolvent
            domain_tol (float): Feasibility tolerance of the domain check
        """
        super().__init__(polyhedron.dimension)
        self.C = polyhedron
        self.tol = tol
        self.max_sweeps = max_sweeps
        self.domain_tol = domain_tol

    def apply_resolvent(self, z, beta):
        return project_polyhedron(z, self.C, self.tol, self.max_sweeps)

    def select(self, y, radius):
        return np.zeros(self.dimension)

    def domain_contains(self, y):
        return self.C.contains(y, self.domain_tol)

    def __str__(self):
        return f"NormalConeOperator({self.C})"


class ZeroSetValuedOperator(SetValuedOperator):
    """B = {0} everywhere, i.e. the normal cone of the whole space."""

    def apply_resolvent(self, z, beta):
        return z.copy()

    def select(self, y, radius):
        return np.zeros(self.dimension)
