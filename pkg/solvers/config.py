"""
Solver configuration.
"""

import math

import numpy as np

from core.errors import ContractViolation
from geometry.hildreth import DEFAULT_MAX_SWEEPS
from linesearch.armijo import DEFAULT_J_MAX
from solvers.schedule import BetaSchedule


class SolverConfig:
    """
    Parameters shared by the parallel and cyclic solvers.

    Attributes:
        delta (float): Sufficient-slope constant in (0, 1)
        theta (float): Line-search grid ratio in (0, 1)
        beta_schedule (BetaSchedule): k -> beta_k with stored bounds
        R (float): Radius of the bounded selection from B_i
        eps_res (float): Residual tolerance deciding x == J_i(x, beta)
        eps_fix (float): Displacement tolerance deciding x^{k+1} == x^k
        eps_proj (float): Projection tolerance
        proj_max_sweeps (int): Hildreth sweep cap
        j_max (int): Inner-loop cap
        k_max (int): Outer-iteration cap
        known_solution (numpy.ndarray): Optional solution used for Fejer distances
        target_radius (float): Optional stop radius around known_solution
        trace_stride (int): Keep every trace_stride-th iteration record
        workers (int): Threads used inside one parallel iteration (1 = sequential)
    """

    def __init__(self, delta=0.1, theta=0.5, beta_schedule=None, R=1.0,
                 eps_res=1e-10, eps_fix=1e-10, eps_proj=1e-8,
                 proj_max_sweeps=DEFAULT_MAX_SWEEPS, j_max=DEFAULT_J_MAX, k_max=100000,
                 known_solution=None, target_radius=None, trace_stride=1, workers=1):
        self.delta = float(delta)
        self.theta = float(theta)
        self.beta_schedule = beta_schedule or BetaSchedule.constant(1.0)
        self.R = float(R)
        self.eps_res = float(eps_res)
        self.eps_fix = float(eps_fix)
        self.eps_proj = float(eps_proj)
        self.proj_max_sweeps = int(proj_max_sweeps)
        self.j_max = int(j_max)
        self.k_max = int(k_max)
        self.known_solution = None if known_solution is None else np.asarray(known_solution, dtype=float)
        self.target_radius = None if target_radius is None else float(target_radius)
        self.trace_stride = int(trace_stride)
        self.workers = int(workers)
        self.validate()

    @classmethod
    def from_settings(cls, settings, **overrides):
        """
        Build a config from a SettingsFile (or any object with get()).

        Args:
            settings: Source of the solver keys
            **overrides: Values taking precedence over the settings

        Returns:
            SolverConfig: The config
        """
        keys = ("delta", "theta", "R", "eps_res", "eps_fix", "eps_proj",
                "proj_max_sweeps", "j_max", "k_max", "trace_stride", "workers")
        values = {key: settings.get(key) for key in keys if settings.get(key) is not None}
        if "beta_schedule" not in overrides and settings.get("beta") is not None:
            values["beta_schedule"] = BetaSchedule.constant(settings.get("beta"))
        values.update(overrides)
        return cls(**values)

    @property
    def beta_min(self):
        return self.beta_schedule.beta_min

    @property
    def beta_max(self):
        return self.beta_schedule.beta_max

    def validate(self):
        """Check every interval constraint; raise ContractViolation on the first failure."""
        if not (0 < self.delta < 1 and 0 < self.theta < 1):
            raise ContractViolation(f"delta and theta must lie in (0, 1), got {self.delta}, {self.theta}")
        if not isinstance(self.beta_schedule, BetaSchedule):
            raise ContractViolation("beta_schedule must be a BetaSchedule")
        for name in ("R", "eps_res", "eps_fix", "eps_proj"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ContractViolation(f"{name} must be positive and finite, got {value}")
        for name in ("proj_max_sweeps", "j_max", "k_max", "trace_stride", "workers"):
            if getattr(self, name) < 1:
                raise ContractViolation(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.target_radius is not None:
            if self.known_solution is None:
                raise ContractViolation("target_radius needs known_solution")
            if not self.target_radius > 0:
                raise ContractViolation(f"target_radius must be positive, got {self.target_radius}")
        if self.known_solution is not None and not np.all(np.isfinite(self.known_solution)):
            raise ContractViolation("known_solution must be finite")

    def __str__(self):
        return (f"SolverConfig(delta={self.delta}, theta={self.theta}, {self.beta_schedule}, R={self.R}, "
                f"eps_res={self.eps_res}, eps_fix={self.eps_fix}, k_max={self.k_max})")
