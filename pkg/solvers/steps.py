"""
Per-component work shared by both solvers: forward-backward point, residual
test and, for unsolved components, the inner loop and its halfspace.
"""

import numpy as np

from core.operators import EvaluationCounter
from core.system import forward_backward_step
from geometry.halfspace import build_halfspace
from linesearch.armijo import armijo_search


class ComponentStep:
    """
    Result of processing one component at x^k.

    Attributes:
        index (int): Component index
        J (numpy.ndarray): J_i(x^k, beta_k)
        residual (float): ||x^k - J||
        solved (bool): residual <= eps_res
        xbar (numpy.ndarray): Anchor of the halfspace (x^k when solved)
        ubar (numpy.ndarray): Selection at xbar (-A_i(x^k) when solved)
        search (LineSearchResult): None when solved
        halfspace (Halfspace): None when solved
        bound_slack (float): Slack of the alpha*delta/beta_max lower bound, None when solved
        counter (EvaluationCounter): Evaluations spent on this component
    """

    def __init__(self, index):
        self.index = index
        self.J = None
        self.residual = float("nan")
        self.solved = False
        self.xbar = None
        self.ubar = None
        self.search = None
        self.halfspace = None
        self.bound_slack = None
        self.counter = EvaluationCounter()


def process_component(system, i, x, beta, cfg):
    """
    Process component i up to its separating halfspace.

    Args:
        system (InclusionSystem): The system
        i (int): Component index
        x (numpy.ndarray): Current iterate
        beta (float): beta_k
        cfg (SolverConfig): Solver parameters

    Returns:
        ComponentStep: Everything the outer loop needs from this component
    """
    step = ComponentStep(i)
    step.J, a_val = forward_backward_step(system, i, x, beta, step.counter)
    gap = x - step.J
    step.residual = float(np.linalg.norm(gap))

    if step.residual <= cfg.eps_res:
        step.solved = True
        step.xbar = x
        step.ubar = -a_val
        return step

    a_op, b_op = system.pair(i)
    search = armijo_search(a_op, b_op, x, step.J, beta, cfg.theta, cfg.delta, cfg.R, cfg.j_max)
    step.counter.record(a_evals=search.a_evals, selections=search.selections)
    step.search = search
    step.xbar = search.xbar
    step.ubar = search.ubar
    step.halfspace = build_halfspace(search.a_val, search.ubar, search.xbar)

    lower_bound = search.alpha * cfg.delta / cfg.beta_max * step.residual ** 2
    step.bound_slack = float((search.a_val + search.ubar) @ (x - search.xbar)) - lower_bound
    return step
