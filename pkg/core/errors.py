"""
Exception hierarchy shared by every package of the solver library.
"""


class SplittingError(Exception):
    """Base class for all errors raised by the splitting library."""


class ContractViolation(SplittingError, ValueError):
    """A precondition, dimension or configuration constraint was violated."""


class NumericError(SplittingError, ArithmeticError):
    """An operator or map produced a non-finite value."""


class ConvergenceFailure(SplittingError, RuntimeError):
    """
    An iterative projection ran out of sweeps.

    Attributes:
        last_iterate (numpy.ndarray): Iterate at the moment the sweep cap was hit
        displacement (float): Primal displacement of the final sweep
    """

    def __init__(self, message, last_iterate=None, displacement=None):
        super().__init__(message)
        self.last_iterate = last_iterate
        self.displacement = displacement


class LineSearchFailure(SplittingError, RuntimeError):
    """
    The Armijo inner loop did not accept any trial up to j_max.

    Attributes:
        j_max (int): The exhausted cap
        history (list): (lhs, rhs) pairs of every rejected trial
    """

    def __init__(self, message, j_max=None, history=None):
        super().__init__(message)
        self.j_max = j_max
        self.history = history or []
