"""
Operator interfaces for the inclusion problems 0 in A(x) + B(x).

A is single valued (evaluated point to point), B is set valued and only ever
touched through its resolvent and through a bounded selection from B(y).
Operators hold no mutable state, so one instance may be shared by threads.
"""

import logging
import threading
from abc import ABC, abstractmethod

import numpy as np

from core.errors import ContractViolation, NumericError

logger = logging.getLogger(__name__)


def as_point(x, dimension=None, name="x"):
    """
    Convert a vector-like value to a finite float point.

    Args:
        x (array_like): Coordinates
        dimension (int): Expected length, or None to accept any length
        name (str): Name used in error messages

    Returns:
        numpy.ndarray: 1-D float array

    Raises:
        ContractViolation: If the shape is wrong or an entry is NaN/Inf
    """
    point = np.asarray(x, dtype=float)
    if point.ndim != 1:
        raise ContractViolation(f"{name} must be a 1-D vector, got shape {point.shape}")
    if dimension is not None and point.shape[0] != dimension:
        raise ContractViolation(f"{name} has dimension {point.shape[0]}, expected {dimension}")
    if not np.all(np.isfinite(point)):
        raise ContractViolation(f"{name} has non-finite entries")
    return point


def check_finite(value, what):
    """Raise NumericError if an intermediate result is not finite."""
    if not np.all(np.isfinite(value)):
        raise NumericError(f"non-finite value produced by {what}")
    return value


class EvaluationCounter:
    """
    Thread-safe tally of the expensive oracle calls of one solve.

    nT is the number of A evaluations plus the number of resolvent
    applications. Bounded selections are tallied separately and are not
    part of nT.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.a_evals = 0
        self.resolvent_evals = 0
        self.selections = 0

    def record(self, a_evals=0, resolvent_evals=0, selections=0):
        """Add evaluation counts."""
        with self._lock:
            self.a_evals += a_evals
            self.resolvent_evals += resolvent_evals
            self.selections += selections

    def merge(self, other):
        """Add the counts of another counter into this one."""
        self.record(other.a_evals, other.resolvent_evals, other.selections)

    @property
    def nT(self):
        return self.a_evals + self.resolvent_evals

    def snapshot(self):
        """
        Get the current counts.

        Returns:
            dict: a_evals, resolvent_evals, selections and nT
        """
        with self._lock:
            return {
                "a_evals": self.a_evals,
                "resolvent_evals": self.resolvent_evals,
                "selections": self.selections,
                "nT": self.a_evals + self.resolvent_evals,
            }

    def __str__(self):
        return f"EvaluationCounter(A={self.a_evals}, resolvent={self.resolvent_evals}, nT={self.nT})"


class SingleValuedOperator(ABC):
    """
    Point-to-point monotone operator A on R^n.

    Monotonicity is assumed, never enforced.
    """

    def __init__(self, dimension):
        """
        Initialize the operator.

        Args:
            dimension (int): Ambient dimension n
        """
        if int(dimension) < 1:
            raise ContractViolation(f"dimension must be positive, got {dimension}")
        self.dimension = int(dimension)

    @abstractmethod
    def evaluate(self, x):
        """Evaluate A at a validated point."""

    def __call__(self, x):
        x = as_point(x, self.dimension)
        return check_finite(np.asarray(self.evaluate(x), dtype=float), str(self))

    def __str__(self):
        return f"{type(self).__name__}(n={self.dimension})"


class SetValuedOperator(ABC):
    """
    Maximal monotone set-valued operator B on R^n.

    Subclasses implement the resolvent (I + beta B)^-1 and a selection of
    some u in B(y) with norm at most R.
    """

    def __init__(self, dimension):
        """
        Initialize the operator.

        Args:
            dimension (int): Ambient dimension n
        """
        if int(dimension) < 1:
            raise ContractViolation(f"dimension must be positive, got {dimension}")
        self.dimension = int(dimension)

    @abstractmethod
    def apply_resolvent(self, z, beta):
        """Compute (I + beta B)^-1 (z) for a validated z."""

    @abstractmethod
    def select(self, y, radius):
        """Return some u in B(y) with norm at most radius."""

    def domain_contains(self, y):
        """Whether y lies in dom(B). Trusted (always True) unless overridden."""
        return True

    def resolvent(self, z, beta):
        """
        Apply the resolvent of B with step beta.

        Args:
            z (array_like): Point to resolve
            beta (float): Positive step size

        Returns:
            numpy.ndarray: (I + beta B)^-1 (z)
        """
        if not beta > 0:
            raise ContractViolation(f"resolvent step must be positive, got {beta}")
        z = as_point(z, self.dimension, "z")
        return check_finite(np.asarray(self.apply_resolvent(z, beta), dtype=float), f"{self} resolvent")

    def select_bounded(self, y, radius):
        """
        Choose u in B(y) intersected with the closed ball of the given radius.

        Args:
            y (array_like): Point of dom(B)
            radius (float): Ball radius R > 0

        Returns:
            numpy.ndarray: The selected u

        Raises:
            ContractViolation: If y is outside dom(B) or the selection leaves the ball
        """
        if not radius > 0:
            raise ContractViolation(f"selection radius must be positive, got {radius}")
        y = as_point(y, self.dimension, "y")
        if not self.domain_contains(y):
            raise ContractViolation(f"{self}: point outside the operator domain")
        u = check_finite(np.asarray(self.select(y, radius), dtype=float), f"{self} selection")
        if np.linalg.norm(u) > radius:
            raise ContractViolation(f"{self}: selection has norm {np.linalg.norm(u):.3e} > R={radius}")
        return u

    def __str__(self):
        return f"{type(self).__name__}(n={self.dimension})"


class FunctionOperator(SingleValuedOperator):
    """Single-valued operator wrapping a plain callable."""

    def __init__(self, func, dimension, name=None):
        super().__init__(dimension)
        self.func = func
        self.name = name or getattr(func, "__name__", "function")

    def evaluate(self, x):
        return self.func(x)

    def __str__(self):
        return f"FunctionOperator({self.name}, n={self.dimension})"
