"""
Parallel projection splitting: all m components are processed at x^k and
x^{k+1} = P_X(P_{H_k}(x^k)), H_k the intersection of the separating
halfspaces of the unsolved components.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from core.errors import SplittingError
from core.operators import EvaluationCounter, as_point
from geometry.polyhedron import project_intersection, project_polyhedron
from solvers.steps import process_component
from solvers.trace import IterationRecord, IterationTrace, Outcome

logger = logging.getLogger(__name__)


def prepare_start(system, x0, cfg, trace):
    """
    Validate x0 and move it into X when it lies outside.

    Returns:
        numpy.ndarray: Starting point in X
    """
    x0 = as_point(x0, system.n, "x0")
    if not system.X.contains(x0, cfg.eps_proj):
        trace.warn(f"x0 outside X (violation {system.X.max_violation(x0):.3e}); projected onto X")
        x0 = project_polyhedron(x0, system.X, cfg.eps_proj, cfg.proj_max_sweeps)
    return x0


def distance_to_solution(x, cfg):
    if cfg.known_solution is None:
        return float("nan")
    return float(np.linalg.norm(x - cfg.known_solution))


def target_reached(fejer_dist, cfg):
    return cfg.target_radius is not None and fejer_dist <= cfg.target_radius


def solve_parallel(system, x0, cfg):
    """
    Run the parallel algorithm.

    Args:
        system (InclusionSystem): System to solve
        x0 (array_like): Starting point (projected onto X if outside)
        cfg (SolverConfig): Solver parameters

    Returns:
        IterationTrace: Records, outcome and totals of the run
    """
    trace = IterationTrace("parallel", cfg.trace_stride)
    counter = EvaluationCounter()
    start = time.perf_counter()
    x = prepare_start(system, x0, cfg, trace)
    logger.info("solve_parallel on %s with %s", system, cfg)

    pool = ThreadPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    k = 0
    try:
        while k < cfg.k_max:
            beta = cfg.beta_schedule(k)
            record = IterationRecord(k, x, beta)
            record.fejer_dist = distance_to_solution(x, cfg)
            trace.add(record)

            if target_reached(record.fejer_dist, cfg):
                record.nT_cum = counter.nT
                trace.finish(Outcome.CONVERGED, x, k, counter, time.perf_counter() - start, "target")
                return trace

            indices = range(1, system.m + 1)
            if pool is None:
                steps = [process_component(system, i, x, beta, cfg) for i in indices]
            else:
                steps = list(pool.map(lambda i: process_component(system, i, x, beta, cfg), indices))

            for step in steps:
                counter.merge(step.counter)
                record.a_evals += step.counter.a_evals
                record.resolvent_evals += step.counter.resolvent_evals
            record.nT_cum = counter.nT
            record.residuals = np.array([step.residual for step in steps])
            record.active_set = [step.index for step in steps if step.solved]

            if len(record.active_set) == system.m:
                trace.finish(Outcome.CONVERGED, x, k, counter, time.perf_counter() - start, "residual")
                return trace

            for step in steps:
                if not step.solved:
                    record.searches[step.index] = step.search
                    record.halfspaces[step.index] = step.halfspace
                    record.bound_slacks[step.index] = step.bound_slack

            y = project_intersection(x, list(record.halfspaces.values()), cfg.eps_proj, cfg.proj_max_sweeps)
            x_next = project_polyhedron(y, system.X, cfg.eps_proj, cfg.proj_max_sweeps)
            record.step_norm = float(np.linalg.norm(x_next - x))
            logger.debug("parallel k=%d res_max=%.3e step=%.3e", k, record.res_max, record.step_norm)

            x = x_next
            k += 1
            if record.step_norm <= cfg.eps_fix:
                trace.finish(Outcome.FIXED_POINT, x, k, counter, time.perf_counter() - start, "fixed_point")
                return trace

        trace.finish(Outcome.MAX_ITERATIONS, x, k, counter, time.perf_counter() - start, "k_max")
        return trace
    except SplittingError as err:
        trace.fail(k, err)
        trace.finish(Outcome.ERROR, x, k, counter, time.perf_counter() - start, "error")
        return trace
    finally:
        if pool is not None:
            pool.shutdown()
