"""
Shared fixtures: seeded experiment instances and small hand-checkable systems.
"""

import numpy as np
import pytest

from core.operators import FunctionOperator
from core.system import InclusionSystem
from geometry.polyhedron import Polyhedron
from problems.generators import RandomSpec, gen_example1, gen_example2
from problems.normal_cone import ZeroSetValuedOperator
from solvers.config import SolverConfig


def pytest_addoption(parser):
    parser.addoption("--update-goldens", action="store_true", default=False,
                     help="Rewrite goldens/ from the current runs")


def identity_system(n=2, bound=10.0):
    """m = 1 system A(x) = x, B = {0}, X = [-bound, bound]^n; its only solution is 0."""
    return InclusionSystem(
        [(FunctionOperator(lambda x: x, n, "identity"), ZeroSetValuedOperator(n))],
        Polyhedron.box(-bound * np.ones(n), bound * np.ones(n)),
        name="identity",
    )


def solution_config(n, **overrides):
    """Experiment settings with the origin as known solution and the 0.001 stop radius."""
    values = {"known_solution": np.zeros(n), "target_radius": 1e-3, "k_max": 10000}
    values.update(overrides)
    return SolverConfig(**values)


@pytest.fixture
def toy_system():
    return identity_system()


@pytest.fixture
def tiny_example1():
    """Example-1 instance small enough for the enumeration oracle (n=3, l=4)."""
    return gen_example1(RandomSpec(n=3, m=2, l=4, seed=20240601))


@pytest.fixture
def example1_5x10():
    return gen_example1(RandomSpec(n=5, m=10, seed=7))


@pytest.fixture
def example2_5x10():
    return gen_example2(RandomSpec(n=5, m=10, seed=7))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
