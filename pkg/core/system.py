"""
System-of-inclusions model and the forward-backward map.

Component indices are 1-based (1..m) throughout the public API.
"""

import logging
import math

import numpy as np

from core.errors import ContractViolation
from core.operators import EvaluationCounter, SetValuedOperator, SingleValuedOperator, as_point, check_finite

logger = logging.getLogger(__name__)


class InclusionSystem:
    """
    The m operator pairs (A_i, B_i) sharing dimension n, plus the projection set X.

    The solutions are the points x with 0 in A_i(x) + B_i(x) for every i.
    """

    def __init__(self, pairs, feasible_set, name=None, metadata=None):
        """
        Initialize the system.

        Args:
            pairs (list): Ordered (SingleValuedOperator, SetValuedOperator) tuples
            feasible_set (Polyhedron): Projection set X, nonempty by its stored witness
            name (str): Optional label used in logs and reports
            metadata (dict): Optional generator information (example, seed, ...)
        """
        self.pairs = [tuple(pair) for pair in pairs]
        if not self.pairs:
            raise ContractViolation("an inclusion system needs at least one operator pair")

        self.n = self.pairs[0][0].dimension
        for index, (a_op, b_op) in enumerate(self.pairs, start=1):
            if not isinstance(a_op, SingleValuedOperator) or not isinstance(b_op, SetValuedOperator):
                raise ContractViolation(f"pair {index} must be (SingleValuedOperator, SetValuedOperator)")
            if a_op.dimension != self.n or b_op.dimension != self.n:
                raise ContractViolation(
                    f"pair {index} has dimensions ({a_op.dimension}, {b_op.dimension}), expected {self.n}")

        if feasible_set is None or feasible_set.dimension != self.n:
            raise ContractViolation("the projection set X must be a polyhedron of the system dimension")
        self.X = feasible_set
        self.name = name or "system"
        self.metadata = dict(metadata or {})

    @property
    def m(self):
        return len(self.pairs)

    def pair(self, i):
        """Get the (A_i, B_i) pair for a 1-based component index."""
        if not 1 <= i <= self.m:
            raise ContractViolation(f"component index {i} outside 1..{self.m}")
        return self.pairs[i - 1]

    def __str__(self):
        return f"InclusionSystem({self.name}, n={self.n}, m={self.m}, X rows={self.X.rows})"


def forward_backward_step(system, i, x, beta, counter=None):
    """
    Evaluate J_i(x, beta) and keep A_i(x) for reuse.

    Args:
        system (InclusionSystem): The system
        i (int): 1-based component index
        x (array_like): Current point
        beta (float): Step size
        counter (EvaluationCounter): Counter charged with one A evaluation and one resolvent

    Returns:
        tuple: (J, A_i(x)) as numpy arrays
    """
    if not beta > 0 or not math.isfinite(beta):
        raise ContractViolation(f"beta must be a positive finite number, got {beta}")
    a_op, b_op = system.pair(i)
    x = as_point(x, system.n)

    a_val = a_op(x)
    forward = check_finite(x - beta * a_val, f"forward step of component {i}")
    j_val = b_op.resolvent(forward, beta)
    if counter is not None:
        counter.record(a_evals=1, resolvent_evals=1)
    return j_val, a_val


def forward_backward(system, i, x, beta, counter=None):
    """
    Compute the forward-backward map J_i(x, beta) = (I + beta B_i)^-1 (x - beta A_i(x)).

    Args:
        system (InclusionSystem): The system
        i (int): 1-based component index
        x (array_like): Current point
        beta (float): Positive step size
        counter (EvaluationCounter): Optional counter, charged one A evaluation
            and one resolvent application

    Returns:
        numpy.ndarray: J_i(x, beta)
    """
    j_val, _ = forward_backward_step(system, i, x, beta, counter)
    return j_val


def residual(system, x, beta, counter=None):
    """
    Per-component fixed-point residuals ||x - J_i(x, beta)||.

    x solves the system exactly when every entry is zero.

    Returns:
        numpy.ndarray: Vector of length m
    """
    x = as_point(x, system.n)
    return np.array([
        np.linalg.norm(x - forward_backward(system, i, x, beta, counter))
        for i in range(1, system.m + 1)
    ])


def verify_solution(system, x, beta, tol, counter=None):
    """
    Check that every component residual is within tol.

    Args:
        system (InclusionSystem): The system
        x (array_like): Candidate solution
        beta (float): Step size used by the residual
        tol (float): Positive finite tolerance

    Returns:
        bool: True iff max residual <= tol
    """
    if not (tol > 0 and math.isfinite(tol)):
        raise ContractViolation(f"tolerance must be positive and finite, got {tol}")
    res = residual(system, x, beta, counter or EvaluationCounter())
    ok = bool(np.max(res) <= tol)
    logger.debug("verify_solution: max residual %.3e, tol %.1e -> %s", np.max(res), tol, ok)
    return ok
