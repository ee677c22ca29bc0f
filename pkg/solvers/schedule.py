"""
Step-size schedules and the cyclic component selector.
"""

import math

from core.errors import ContractViolation


def rho(k, m):
    """
    Periodic surjection k -> {1, ..., m}: the remainder of k by m, with multiples of m sent to m.

    Args:
        k (int): Nonnegative iteration counter
        m (int): Number of components

    Returns:
        int: Component index in 1..m
    """
    if m < 1:
        raise ContractViolation(f"m must be >= 1, got {m}")
    if k < 0:
        raise ContractViolation(f"k must be nonnegative, got {k}")
    remainder = k % m
    return remainder if remainder else m


class BetaSchedule:
    """
    Step sizes beta_k confined to [beta_min, beta_max].

    Values outside the declared bounds raise ContractViolation when requested.
    """

    def __init__(self, func, beta_min, beta_max):
        """
        Initialize the schedule.

        Args:
            func (callable): k -> beta_k
            beta_min (float): Lower bound, positive
            beta_max (float): Upper bound, finite and >= beta_min
        """
        if not (0 < beta_min <= beta_max < math.inf):
            raise ContractViolation(f"need 0 < beta_min <= beta_max < inf, got [{beta_min}, {beta_max}]")
        self.func = func
        self.beta_min = float(beta_min)
        self.beta_max = float(beta_max)

    @classmethod
    def constant(cls, beta):
        """Schedule with beta_k = beta for every k."""
        beta = float(beta)
        return cls(lambda k: beta, beta, beta)

    def __call__(self, k):
        value = float(self.func(k))
        if not self.beta_min <= value <= self.beta_max:
            raise ContractViolation(
                f"beta_{k} = {value} outside [{self.beta_min}, {self.beta_max}]")
        return value

    def __str__(self):
        if self.beta_min == self.beta_max:
            return f"BetaSchedule(constant {self.beta_min})"
        return f"BetaSchedule([{self.beta_min}, {self.beta_max}])"
