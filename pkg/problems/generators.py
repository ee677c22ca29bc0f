"""
Seeded random instances of the two experiment families.

Both families share the constraint set C = {x : A x <= b} with b >= 0, so the
origin is feasible and, since every A_i vanishes at 0, the origin solves
every generated system.

  - example 1: A_i(x) = M_i x with M_i = Q_i^T Q_i
  - example 2: A_i(x) = M_i x + (x_1^3, ..., x_n^3)

Random streams come from numpy's PCG64 bit generator, whose output for a
given seed is fixed across platforms. Draw order: Q_1..Q_m, then A, then b,
each filled row-major with uniform [0, 1) entries times `scale`.
"""

import logging

import numpy as np

from core.errors import ContractViolation
from core.system import InclusionSystem
from geometry.polyhedron import Polyhedron
from problems.normal_cone import NormalConeOperator
from problems.operators import CubicLinearOperator, LinearOperator

logger = logging.getLogger(__name__)

EXAMPLES = (1, 2)


class RandomSpec:
    """Size, seed and entry scale of a random instance."""

    def __init__(self, n, m, l=20, seed=0, scale=1.0):
        """
        Initialize the spec.

        Args:
            n (int): Dimension
            m (int): Number of system components
            l (int): Number of constraint rows of C
            seed (int): Unsigned 64-bit seed
            scale (float): Multiplier of every sampled entry
        """
        self.n = int(n)
        self.m = int(m)
        self.l = int(l)
        self.seed = int(seed)
        self.scale = float(scale)
        if min(self.n, self.m, self.l) < 1:
            raise ContractViolation(f"n, m and l must be >= 1, got n={n}, m={m}, l={l}")
        if not 0 <= self.seed < 2 ** 64:
            raise ContractViolation(f"seed must be an unsigned 64-bit integer, got {seed}")
        if not self.scale > 0:
            raise ContractViolation(f"scale must be positive, got {scale}")

    def rng(self):
        """Fresh generator positioned at the start of this spec's stream."""
        return np.random.Generator(np.random.PCG64(self.seed))

    def to_dict(self):
        return {"n": self.n, "m": self.m, "l": self.l, "seed": self.seed, "scale": self.scale}

    def __eq__(self, other):
        return isinstance(other, RandomSpec) and self.to_dict() == other.to_dict()

    def __str__(self):
        return f"RandomSpec(n={self.n}, m={self.m}, l={self.l}, seed={self.seed}, scale={self.scale})"


def draw_instance_data(spec):
    """
    Sample the raw matrices of an instance.

    Returns:
        tuple: (Q of shape m x n x n, A of shape l x n, b of length l)
    """
    rng = spec.rng()
    Q = rng.random((spec.m, spec.n, spec.n)) * spec.scale
    A = rng.random((spec.l, spec.n)) * spec.scale
    b = rng.random(spec.l) * spec.scale
    return Q, A, b


def build_system(example, spec, Q, A, b):
    """
    Assemble an experiment system from its raw matrices.

    Args:
        example (int): 1 (linear) or 2 (linear plus cube)
        spec (RandomSpec): Spec recorded in the metadata
        Q (numpy.ndarray): m x n x n factors of M_i = Q_i^T Q_i
        A (numpy.ndarray): Constraint matrix of C
        b (numpy.ndarray): Nonnegative right-hand side of C

    Returns:
        InclusionSystem: The system with X = C
    """
    if example not in EXAMPLES:
        raise ContractViolation(f"unknown example {example}, expected one of {EXAMPLES}")
    b = np.asarray(b, dtype=float)
    if np.any(b < 0):
        raise ContractViolation("the right-hand side b must be nonnegative")

    C = Polyhedron(A, b, witness=np.zeros(spec.n))
    cone = NormalConeOperator(C)
    operator_cls = LinearOperator if example == 1 else CubicLinearOperator
    pairs = [(operator_cls(Qi.T @ Qi), cone) for Qi in np.asarray(Q, dtype=float)]

    logger.debug("built example %d instance %s", example, spec)
    return InclusionSystem(
        pairs,
        C,
        name=f"example{example}(n={spec.n}, m={spec.m}, seed={spec.seed})",
        metadata={"example": example, "spec": spec, "known_solution": np.zeros(spec.n)},
    )


def gen_example1(spec):
    """Generate the linear PSD family: A_i(x) = Q_i^T Q_i x, B_i = N_C, X = C."""
    return build_system(1, spec, *draw_instance_data(spec))


def gen_example2(spec):
    """Generate the non-Lipschitz family: A_i(x) = Q_i^T Q_i x + x^3, B_i = N_C, X = C."""
    return build_system(2, spec, *draw_instance_data(spec))


def generate(example, spec):
    """Dispatch to the generator of an experiment family."""
    if example == 1:
        return gen_example1(spec)
    if example == 2:
        return gen_example2(spec)
    raise ContractViolation(f"unknown example {example}, expected one of {EXAMPLES}")
