"""
Separating halfspaces H(xbar, ubar) = {y : <A(xbar) + ubar, y - xbar> <= 0}.
"""

import numpy as np

from core.errors import ContractViolation
from core.operators import as_point

# Normals at or below this norm describe the whole space.
DEGENERATE_NORM = 1e-14


class Halfspace:
    """
    Halfspace {y : <g, y - xbar> <= 0} kept in anchored form (normal g, anchor xbar).

    A normal with norm at most DEGENERATE_NORM makes the halfspace all of R^n.
    """

    def __init__(self, normal, anchor):
        """
        Initialize the halfspace.

        Args:
            normal (array_like): Normal vector g
            anchor (array_like): Anchor point xbar on the boundary
        """
        self.normal = as_point(normal, name="normal")
        self.anchor = as_point(anchor, self.normal.shape[0], "anchor")
        self.normal_norm = float(np.linalg.norm(self.normal))
        self.degenerate = self.normal_norm <= DEGENERATE_NORM

    @property
    def dimension(self):
        return self.normal.shape[0]

    def violation(self, y):
        """Signed value <g, y - xbar>; positive outside the halfspace."""
        return float(self.normal @ (np.asarray(y, dtype=float) - self.anchor))

    def contains(self, y, tol=0.0):
        """
        Check if a point lies in the halfspace.

        Args:
            y (array_like): Point to test
            tol (float): Allowed violation of <g, y - xbar> <= 0

        Returns:
            bool: True if the point is inside
        """
        return self.degenerate or self.violation(y) <= tol

    def offset_form(self):
        """
        Unit-normal offset form (a, c) with {y : <a, y> <= c}.

        Returns:
            tuple: (unit normal, offset)
        """
        if self.degenerate:
            raise ContractViolation("a degenerate halfspace has no offset form")
        unit = self.normal / self.normal_norm
        return unit, float(unit @ self.anchor)

    def distance(self, y):
        """Euclidean distance from y to the halfspace."""
        if self.degenerate:
            return 0.0
        return max(0.0, self.violation(y)) / self.normal_norm

    def __str__(self):
        if self.degenerate:
            return f"Halfspace(whole R^{self.dimension})"
        return f"Halfspace(normal={self.normal}, anchor={self.anchor})"


def build_halfspace(a_val, u, xbar):
    """
    Build H(xbar, u) with normal A(xbar) + u anchored at xbar.

    Args:
        a_val (array_like): A evaluated at xbar
        u (array_like): Element of B(xbar)
        xbar (array_like): Anchor point

    Returns:
        Halfspace: The separating halfspace
    """
    a_val = as_point(a_val, name="A(xbar)")
    u = as_point(u, a_val.shape[0], "u")
    return Halfspace(a_val + u, as_point(xbar, a_val.shape[0], "xbar"))


def project_halfspace(x, halfspace):
    """
    Project onto a single halfspace in closed form.

    Args:
        x (array_like): Point to project
        halfspace (Halfspace): Target halfspace

    Returns:
        numpy.ndarray: x - max(0, <g, x - xbar>) / ||g||^2 * g, or x if degenerate
    """
    x = as_point(x, halfspace.dimension)
    if halfspace.degenerate:
        return x.copy()
    return x - (halfspace.distance(x) / halfspace.normal_norm) * halfspace.normal
