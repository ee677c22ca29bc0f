"""
Single-valued operators used by the generated experiment families.
"""

import numpy as np

from core.errors import ContractViolation
from core.operators import SingleValuedOperator


class LinearOperator(SingleValuedOperator):
    """A(x) = M x for a square matrix M (monotone when M + M^T is PSD)."""

    def __init__(self, M):
        M = np.atleast_2d(np.asarray(M, dtype=float))
        if M.shape[0] != M.shape[1]:
            raise ContractViolation(f"operator matrix must be square, got {M.shape}")
        super().__init__(M.shape[0])
        self.M = M

    def evaluate(self, x):
        return self.M @ x


class CubicLinearOperator(LinearOperator):
    """
    A(x) = M x + f(x) with f the componentwise cube.

    Monotone and continuous but not Lipschitz on R^n.
    """

    def evaluate(self, x):
        return self.M @ x + x ** 3
