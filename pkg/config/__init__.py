"""
Configuration package: YAML settings for the solver and the benchmark harness.
"""

from config.settings import SettingsFile, SOLVER_DEFAULTS, BENCHMARK_DEFAULTS
