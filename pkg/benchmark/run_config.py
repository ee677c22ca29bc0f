"""
Benchmark run configuration: settings files overlaid with command-line flags.
"""

import numpy as np

from config.settings import SettingsFile
from core.errors import ContractViolation
from solvers.config import SolverConfig
from solvers.schedule import BetaSchedule

ALGORITHM_CHOICES = ("parallel", "cyclic", "both")


class RunConfig:
    """
    Everything one benchmark invocation needs.

    Defaults mirror the experiment setup: delta 0.1, theta 0.5, beta_k = 1,
    x0 = (1, ..., 1), stop at distance 0.001 from the known solution 0.
    """

    FIELDS = (
        "example", "algorithm", "n", "m", "l", "seed", "scale",
        "delta", "theta", "beta", "R", "tol_dist",
        "k_max", "j_max", "eps_res", "eps_fix", "eps_proj", "proj_max_sweeps",
        "trace_stride", "workers",
        "trace_dir", "report_csv", "instance_in", "instance_out", "golden_out", "table",
    )

    def __init__(self, **values):
        self.example = 1
        self.algorithm = "both"
        self.n = 5
        self.m = 10
        self.l = 20
        self.seed = 7
        self.scale = 1.0
        self.delta = 0.1
        self.theta = 0.5
        self.beta = 1.0
        self.R = 1.0
        self.tol_dist = 0.001
        self.k_max = 10000
        self.j_max = 100
        self.eps_res = 1e-10
        self.eps_fix = 1e-10
        self.eps_proj = 1e-8
        self.proj_max_sweeps = 100000
        self.trace_stride = 1
        self.workers = 1
        self.trace_dir = None
        self.report_csv = None
        self.instance_in = None
        self.instance_out = None
        self.golden_out = None
        self.table = None
        for key, value in values.items():
            if key not in self.FIELDS:
                raise ContractViolation(f"unknown run option {key!r}")
            setattr(self, key, value)
        self.validate()

    @classmethod
    def from_settings(cls, config_name="default", config_dir=None, **overrides):
        """
        Build a run config from the <name>_benchmark.yaml and <name>_solver.yaml files.

        Benchmark keys win over solver keys of the same name (k_max).
        """
        solver = SettingsFile("solver", config_name, config_dir)
        bench = SettingsFile("benchmark", config_name, config_dir)
        values = {key: value for key, value in solver.config.items() if key in cls.FIELDS}
        values.update({key: value for key, value in bench.config.items() if key in cls.FIELDS})
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)

    @classmethod
    def from_args(cls, args):
        """Build a run config from parsed command-line arguments (None means not given)."""
        overrides = {key: getattr(args, key, None) for key in cls.FIELDS}
        return cls.from_settings(getattr(args, "config", "default"), **overrides)

    def validate(self):
        if int(self.example) not in (1, 2):
            raise ContractViolation(f"example must be 1 or 2, got {self.example}")
        if self.algorithm not in ALGORITHM_CHOICES:
            raise ContractViolation(f"algorithm must be one of {ALGORITHM_CHOICES}, got {self.algorithm!r}")
        if self.table is not None:
            if int(self.table) not in (1, 2):
                raise ContractViolation(f"table must be 1 or 2, got {self.table}")
            if self.instance_in or self.instance_out or self.golden_out:
                raise ContractViolation("table mode generates its own instances; drop the instance and golden files")
        if not self.tol_dist > 0:
            raise ContractViolation(f"tol_dist must be positive, got {self.tol_dist}")
        # Remaining interval checks are shared with the solver config
        self.solver_config()

    def replace(self, **changes):
        """Copy of this config with some options changed."""
        values = {key: getattr(self, key) for key in self.FIELDS}
        values.update(changes)
        return RunConfig(**values)

    @property
    def algorithms(self):
        return ["parallel", "cyclic"] if self.algorithm == "both" else [self.algorithm]

    def solver_config(self, n=None):
        """
        Solver parameters of this run, with the origin as known solution.

        Args:
            n (int): Instance dimension (defaults to self.n)

        Returns:
            SolverConfig: The solver config
        """
        return SolverConfig(
            delta=self.delta,
            theta=self.theta,
            beta_schedule=BetaSchedule.constant(self.beta),
            R=self.R,
            eps_res=self.eps_res,
            eps_fix=self.eps_fix,
            eps_proj=self.eps_proj,
            proj_max_sweeps=self.proj_max_sweeps,
            j_max=self.j_max,
            k_max=self.k_max,
            known_solution=np.zeros(n or int(self.n)),
            target_radius=self.tol_dist,
            trace_stride=self.trace_stride,
            workers=self.workers,
        )

    def __str__(self):
        return (f"RunConfig(example={self.example}, algorithm={self.algorithm}, n={self.n}, m={self.m}, "
                f"l={self.l}, seed={self.seed})")
