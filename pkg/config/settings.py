"""
YAML settings files for the solver and the benchmark harness.
"""

import logging
import os

import yaml

logger = logging.getLogger(__name__)

CONFIG_DIR = os.path.dirname(os.path.abspath(__file__))

SOLVER_DEFAULTS = {
    "delta": 0.1,
    "theta": 0.5,
    "beta": 1.0,  # constant schedule
    "R": 1.0,
    "eps_res": 1e-10,
    "eps_fix": 1e-10,
    "eps_proj": 1e-8,
    "proj_max_sweeps": 100000,
    "j_max": 100,
    "k_max": 100000,
    "trace_stride": 1,
    "workers": 1,
}

BENCHMARK_DEFAULTS = {
    "example": 1,
    "algorithm": "both",
    "n": 5,
    "m": 10,
    "l": 20,
    "seed": 7,
    "scale": 1.0,
    "tol_dist": 0.001,
    "k_max": 10000,
}

DEFAULTS = {"solver": SOLVER_DEFAULTS, "benchmark": BENCHMARK_DEFAULTS}


class SettingsFile:
    """Settings loaded from config/<name>_<kind>.yaml on top of built-in defaults."""

    def __init__(self, kind, config_name="default", config_dir=None):
        """
        Initialize the settings.

        Args:
            kind (str): "solver" or "benchmark"
            config_name (str): Name of the configuration to load
            config_dir (str): Directory holding the YAML files
        """
        if kind not in DEFAULTS:
            raise ValueError(f"unknown settings kind {kind!r}, expected one of {sorted(DEFAULTS)}")
        self.kind = kind
        self.config_name = config_name
        self.config_path = os.path.join(config_dir or CONFIG_DIR, f"{config_name}_{kind}.yaml")
        self.defaults = dict(DEFAULTS[kind])
        self.config = self.load_config()

    def load_config(self):
        """Load configuration from file or use defaults."""
        if not os.path.exists(self.config_path):
            logger.warning("configuration file %s not found, using defaults", self.config_path)
            return dict(self.defaults)
        with open(self.config_path, "r") as file:
            content = yaml.safe_load(file) or {}
        if not isinstance(content, dict):
            raise ValueError(f"{self.config_path} must hold a mapping")
        unknown = set(content) - set(self.defaults)
        if unknown:
            logger.warning("ignoring unknown keys in %s: %s", self.config_path, sorted(unknown))
        return {**self.defaults, **{key: content[key] for key in content if key in self.defaults}}

    def get(self, key, default=None):
        """Get a configuration value."""
        return self.config.get(key, default)

    def set(self, key, value):
        """Set a configuration value."""
        self.config[key] = value

    def save(self):
        """Save the current configuration to file."""
        with open(self.config_path, "w") as file:
            yaml.safe_dump(self.config, file, default_flow_style=False)

    def __str__(self):
        return f"SettingsFile({self.config_name}_{self.kind}): {self.config}"
