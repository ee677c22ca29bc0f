"""
Cyclic projection splitting: one component rho(k) per iteration, projecting
onto its single separating halfspace and then onto X.

Components found solved at an unchanged x accumulate in a satisfied set; the
set is emptied by every projection step, and the run has converged once it
holds all m components.
"""

import logging
import time

import numpy as np

from core.errors import SplittingError
from core.operators import EvaluationCounter
from geometry.polyhedron import project_intersection, project_polyhedron
from solvers.parallel import distance_to_solution, prepare_start, target_reached
from solvers.schedule import rho
from solvers.steps import process_component
from solvers.trace import IterationRecord, IterationTrace, Outcome

logger = logging.getLogger(__name__)


def solve_cyclic(system, x0, cfg):
    """
    Run the cyclic algorithm.

    Args:
        system (InclusionSystem): System to solve
        x0 (array_like): Starting point (projected onto X if outside)
        cfg (SolverConfig): Solver parameters

    Returns:
        IterationTrace: Records, outcome and totals of the run
    """
    trace = IterationTrace("cyclic", cfg.trace_stride)
    counter = EvaluationCounter()
    start = time.perf_counter()
    x = prepare_start(system, x0, cfg, trace)
    logger.info("solve_cyclic on %s with %s", system, cfg)

    satisfied = set()
    k = 0
    try:
        while k < cfg.k_max:
            beta = cfg.beta_schedule(k)
            i = rho(k, system.m)
            record = IterationRecord(k, x, beta)
            record.component = i
            record.fejer_dist = distance_to_solution(x, cfg)
            trace.add(record)

            if target_reached(record.fejer_dist, cfg):
                record.nT_cum = counter.nT
                trace.finish(Outcome.CONVERGED, x, k, counter, time.perf_counter() - start, "target")
                return trace

            step = process_component(system, i, x, beta, cfg)
            counter.merge(step.counter)
            record.a_evals = step.counter.a_evals
            record.resolvent_evals = step.counter.resolvent_evals
            record.nT_cum = counter.nT
            record.residuals = np.full(system.m, np.nan)
            record.residuals[i - 1] = step.residual

            if step.solved:
                satisfied.add(i)
                record.active_set = sorted(satisfied)
                k += 1
                if len(satisfied) == system.m:
                    trace.finish(Outcome.CONVERGED, x, k, counter, time.perf_counter() - start, "residual")
                    return trace
                continue

            record.searches[i] = step.search
            record.halfspaces[i] = step.halfspace
            record.bound_slacks[i] = step.bound_slack

            y = project_intersection(x, [step.halfspace], cfg.eps_proj, cfg.proj_max_sweeps)
            x_next = project_polyhedron(y, system.X, cfg.eps_proj, cfg.proj_max_sweeps)
            record.step_norm = float(np.linalg.norm(x_next - x))
            satisfied.clear()
            logger.debug("cyclic k=%d component=%d res=%.3e step=%.3e", k, i, step.residual, record.step_norm)

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
