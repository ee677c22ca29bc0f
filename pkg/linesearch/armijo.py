"""
Armijo-type inner loop shared by both splitting algorithms.

Trial points walk from J back toward x on the geometric grid theta^j until

    <A(y_j) + u_j, x - J>  >=  (delta / beta) ||x - J||^2,
    y_j = theta^j J + (1 - theta^j) x,   u_j in B(y_j), ||u_j|| <= R.
"""

import logging

import numpy as np

from core.errors import ContractViolation, LineSearchFailure
from core.operators import as_point

logger = logging.getLogger(__name__)

DEFAULT_J_MAX = 100


class LineSearchResult:
    """
    Accepted trial of the inner loop.

    Attributes:
        alpha (float): theta^j
        j (int): Accepted grid index
        xbar (numpy.ndarray): alpha J + (1 - alpha) x
        ubar (numpy.ndarray): Selection from B(xbar), norm at most R
        a_val (numpy.ndarray): A(xbar)
        a_evals (int): A evaluations consumed (j + 1)
        history (list): (lhs, rhs) for every trial, the accepted one last
    """

    def __init__(self, alpha, j, xbar, ubar, a_val, a_evals, history):
        self.alpha = alpha
        self.j = j
        self.xbar = xbar
        self.ubar = ubar
        self.a_val = a_val
        self.a_evals = a_evals
        self.history = history

    @property
    def selections(self):
        return self.a_evals

    @property
    def accepted_margin(self):
        """lhs - rhs at the accepted trial."""
        lhs, rhs = self.history[-1]
        return lhs - rhs

    def __str__(self):
        return f"LineSearchResult(j={self.j}, alpha={self.alpha:.3e})"


def armijo_search(A, B, x, J, beta, theta, delta, R, j_max=DEFAULT_J_MAX):
    """
    Run the inner loop for one component.

    Args:
        A (SingleValuedOperator): Single-valued part of the component
        B (SetValuedOperator): Set-valued part of the component
        x (array_like): Current iterate
        J (array_like): Forward-backward point J(x, beta), different from x
        beta (float): Step size of the current iteration
        theta (float): Grid ratio in (0, 1)
        delta (float): Sufficient-slope constant in (0, 1)
        R (float): Selection radius
        j_max (int): Largest grid index tried

    Returns:
        LineSearchResult: The first accepted trial

    Raises:
        LineSearchFailure: If no j in 0..j_max is accepted
    """
    if not (0 < theta < 1 and 0 < delta < 1):
        raise ContractViolation(f"theta and delta must lie in (0, 1), got theta={theta}, delta={delta}")
    if not (beta > 0 and R > 0):
        raise ContractViolation(f"beta and R must be positive, got beta={beta}, R={R}")
    x = as_point(x, A.dimension)
    J = as_point(J, A.dimension, "J")

    direction = x - J
    gap_sq = float(direction @ direction)
    if gap_sq == 0.0:
        raise ContractViolation("line search called at a point with x == J")
    rhs = delta / beta * gap_sq

    history = []
    for j in range(j_max + 1):
        alpha = theta ** j
        trial = alpha * J + (1.0 - alpha) * x
        a_val = A(trial)
        u = B.select_bounded(trial, R)
        lhs = float((a_val + u) @ direction)
        history.append((lhs, rhs))
        if lhs >= rhs:
            logger.debug("armijo: accepted j=%d (lhs %.3e >= rhs %.3e)", j, lhs, rhs)
            return LineSearchResult(alpha, j, trial, u, a_val, j + 1, history)

    raise LineSearchFailure(
        f"inner loop found no acceptable trial up to j_max={j_max}", j_max=j_max, history=history)
