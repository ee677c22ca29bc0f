"""
Per-iteration records and the trace returned by both solvers.
"""

import enum
import logging

import numpy as np

logger = logging.getLogger(__name__)


class Outcome(enum.Enum):
    CONVERGED = "Converged"
    FIXED_POINT = "FixedPoint"
    MAX_ITERATIONS = "MaxIterations"
    ERROR = "Error"


class IterationRecord:
    """
    State of one outer iteration k.

    Attributes:
        k (int): Iteration counter
        x (numpy.ndarray): Iterate x^k at the start of the iteration
        beta (float): beta_k
        residuals (numpy.ndarray): ||x^k - J_i|| per component, NaN where not computed
        active_set (list): Components counted as solved at x^k
        component (int): Component processed by the cyclic solver, None for the parallel one
        searches (dict): component -> LineSearchResult of this iteration
        halfspaces (dict): component -> Halfspace projected onto
        bound_slacks (dict): component -> <A(xbar)+ubar, x-xbar> - alpha*delta/beta_max*||x-J||^2
        a_evals (int): A evaluations of this iteration
        resolvent_evals (int): Resolvent applications of this iteration
        nT_cum (int): Cumulative nT after this iteration
        step_norm (float): ||x^{k+1} - x^k||, NaN when no projection step was taken
        fejer_dist (float): ||x^k - x*||, NaN without a known solution
    """

    def __init__(self, k, x, beta):
        self.k = k
        self.x = np.array(x, dtype=float)
        self.beta = beta
        self.residuals = np.array([])
        self.active_set = []
        self.component = None
        self.searches = {}
        self.halfspaces = {}
        self.bound_slacks = {}
        self.a_evals = 0
        self.resolvent_evals = 0
        self.nT_cum = 0
        self.step_norm = float("nan")
        self.fejer_dist = float("nan")

    @property
    def alphas(self):
        return {i: search.alpha for i, search in self.searches.items()}

    @property
    def res_max(self):
        finite = self.residuals[~np.isnan(self.residuals)] if self.residuals.size else self.residuals
        return float(np.max(finite)) if finite.size else float("nan")

    @property
    def alphas_min(self):
        return min(self.alphas.values()) if self.searches else float("nan")

    def __str__(self):
        return f"IterationRecord(k={self.k}, res_max={self.res_max:.3e}, step={self.step_norm:.3e})"


class IterationTrace:
    """
    Outcome, totals and (possibly thinned) records of one solve.

    Records are kept when k is a multiple of the stride; the last record of
    the run is always kept, so k is strictly increasing along `records`.
    """

    def __init__(self, algorithm, stride=1):
        self.algorithm = algorithm
        self.stride = max(1, int(stride))
        self.records = []
        self.outcome = None
        self.stop_reason = None
        self.x_final = None
        self.iterations = 0
        self.a_evals = 0
        self.resolvent_evals = 0
        self.wall_time = 0.0
        self.warnings = []
        self.error = None
        self.failed_iteration = None
        self._last = None

    @property
    def nT(self):
        return self.a_evals + self.resolvent_evals

    def add(self, record):
        """Offer a record; it is stored if it falls on the stride."""
        self._last = record
        if record.k % self.stride == 0:
            self.records.append(record)

    def warn(self, message):
        logger.warning(message)
        self.warnings.append(message)

    def finish(self, outcome, x_final, iterations, counter, wall_time, stop_reason=None):
        """
        Close the trace.

        Args:
            outcome (Outcome): How the run ended
            x_final (numpy.ndarray): Last iterate
            iterations (int): Outer iterations performed
            counter (EvaluationCounter): Counter of the solve
            wall_time (float): Elapsed seconds
            stop_reason (str): "residual", "target", "fixed_point", "k_max" or "error"
        """
        if self._last is not None and (not self.records or self.records[-1] is not self._last):
            self.records.append(self._last)
        self.outcome = outcome
        self.stop_reason = stop_reason
        self.x_final = np.array(x_final, dtype=float)
        self.iterations = iterations
        self.a_evals = counter.a_evals
        self.resolvent_evals = counter.resolvent_evals
        self.wall_time = wall_time
        logger.info("%s: %s (%s) after %d iterations, nT=%d, %.3fs",
                    self.algorithm, outcome.value, stop_reason, iterations, self.nT, wall_time)

    def fail(self, k, error):
        """Annotate the failing iteration and error message."""
        self.error = f"{type(error).__name__}: {error}"
        self.failed_iteration = k
        logger.error("%s failed at iteration %d: %s", self.algorithm, k, self.error)

    @property
    def converged(self):
        return self.outcome is Outcome.CONVERGED

    def __str__(self):
        outcome = self.outcome.value if self.outcome else "running"
        return f"IterationTrace({self.algorithm}, {outcome}, iter={self.iterations}, nT={self.nT})"
