"""
Solvers package: the parallel and cyclic projection-splitting algorithms.
"""

from solvers.schedule import rho, BetaSchedule
from solvers.config import SolverConfig
from solvers.trace import Outcome, IterationRecord, IterationTrace
from solvers.parallel import solve_parallel
from solvers.cyclic import solve_cyclic
from solvers import diagnostics

ALGORITHMS = {"parallel": solve_parallel, "cyclic": solve_cyclic}
