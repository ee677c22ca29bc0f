import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from conftest import solution_config
from core.errors import ContractViolation
from core.operators import FunctionOperator
from core.system import InclusionSystem, residual, verify_solution
from geometry.active_set import project_by_enumeration
from geometry.polyhedron import Polyhedron, project_intersection
from problems.generators import RandomSpec, gen_example1, generate
from problems.normal_cone import ZeroSetValuedOperator
from solvers import ALGORITHMS, BetaSchedule, Outcome, SolverConfig, diagnostics, rho, solve_cyclic, solve_parallel


class TestRho:

    @pytest.mark.parametrize("k,m,expected", [(1, 3, 1), (6, 3, 3), (0, 5, 5), (7, 1, 1), (4, 3, 1)])
    def test_values(self, k, m, expected):
        assert rho(k, m) == expected

    def test_covers_every_component(self):
        assert {rho(k, 4) for k in range(10)} == {1, 2, 3, 4}

    def test_contract(self):
        with pytest.raises(ContractViolation):
            rho(-1, 3)
        with pytest.raises(ContractViolation):
            rho(2, 0)


class TestConfig:

    def test_constant_schedule(self):
        schedule = BetaSchedule.constant(2.0)
        assert schedule(0) == schedule(100) == 2.0
        assert schedule.beta_min == schedule.beta_max == 2.0

    def test_schedule_out_of_range(self):
        schedule = BetaSchedule(lambda k: 2.0, 0.5, 1.0)
        with pytest.raises(ContractViolation):
            schedule(0)

    @pytest.mark.parametrize("bounds", [(0.0, 1.0), (2.0, 1.0), (1.0, np.inf)])
    def test_schedule_bounds(self, bounds):
        with pytest.raises(ContractViolation):
            BetaSchedule(lambda k: 1.0, *bounds)

    def test_defaults(self):
        cfg = SolverConfig()
        assert (cfg.delta, cfg.theta, cfg.R) == (0.1, 0.5, 1.0)
        assert cfg.beta_min == cfg.beta_max == 1.0

    @pytest.mark.parametrize("kwargs", [{"delta": 1.0}, {"theta": 0.0}, {"R": 0.0}, {"eps_res": -1.0},
                                        {"k_max": 0}, {"workers": 0}, {"trace_stride": 0},
                                        {"target_radius": 1e-3}, {"beta_schedule": 1.0}])
    def test_contract(self, kwargs):
        with pytest.raises(ContractViolation):
            SolverConfig(**kwargs)


class TestParallel:

    def test_origin_converges_immediately(self, example1_5x10):
        trace = solve_parallel(example1_5x10, np.zeros(5), SolverConfig())
        assert trace.outcome is Outcome.CONVERGED
        assert trace.stop_reason == "residual"
        assert trace.iterations == 0
        assert trace.nT == 20
        assert trace.records[0].active_set == list(range(1, 11))

    def test_halving_sequence(self, toy_system):
        # A(x) = x, beta = 1: J = 0, the search accepts alpha = 0.5, and the
        # projection onto the halfspace lands on x/2
        x0 = np.array([1.0, 2.0])
        trace = solve_parallel(toy_system, x0, SolverConfig(eps_fix=1e-14))
        assert trace.outcome is Outcome.CONVERGED
        assert trace.stop_reason == "residual"
        assert trace.iterations == 35
        assert trace.nT == 35 * 4 + 2
        for record in trace.records[:10]:
            assert_allclose(record.x, 0.5 ** record.k * x0, rtol=1e-12)
            assert record.searches[1].j == 1
        assert_allclose(trace.x_final, 0.5 ** 35 * x0, rtol=1e-10)

    @pytest.mark.parametrize("example", [1, 2])
    def test_convergence_n5_m10(self, example):
        system = generate(example, RandomSpec(n=5, m=10, seed=7))
        trace = solve_parallel(system, np.ones(5), solution_config(5))
        assert trace.outcome is Outcome.CONVERGED
        assert trace.iterations <= 1000
        assert np.linalg.norm(trace.x_final) <= 1e-3

    def test_start_outside_x_is_projected(self, toy_system):
        trace = solve_parallel(toy_system, [20.0, 0.0], SolverConfig(k_max=3))
        assert len(trace.warnings) == 1
        assert_allclose(trace.records[0].x, [10.0, 0.0], atol=1e-8)

    def test_threaded_components_match_sequential(self, example2_5x10):
        sequential = solve_parallel(example2_5x10, np.ones(5), solution_config(5))
        threaded = solve_parallel(example2_5x10, np.ones(5), solution_config(5, workers=2))
        assert threaded.iterations == sequential.iterations
        assert threaded.nT == sequential.nT
        assert_array_equal(threaded.x_final, sequential.x_final)

    def test_max_iterations(self, example1_5x10):
        trace = solve_parallel(example1_5x10, np.ones(5), SolverConfig(k_max=2))
        assert trace.outcome is Outcome.MAX_ITERATIONS
        assert trace.iterations == 2

    def test_varying_step_sizes(self, example1_5x10):
        schedule = BetaSchedule(lambda k: 0.5 if k % 2 else 1.0, 0.5, 1.0)
        trace = solve_parallel(example1_5x10, np.ones(5), solution_config(5, beta_schedule=schedule))
        assert trace.outcome is Outcome.CONVERGED
        assert all(r.beta == (0.5 if r.k % 2 else 1.0) for r in trace.records)
        assert not diagnostics.descent_bound_violations(trace, 1e-9)

    def test_trace_stride(self, example1_5x10):
        trace = solve_parallel(example1_5x10, np.ones(5), solution_config(5, trace_stride=3))
        ks = [record.k for record in trace.records]
        assert all(k % 3 == 0 for k in ks[:-1])
        assert ks[-1] == trace.iterations
        assert ks == sorted(set(ks))


class TestCyclic:

    def test_origin_accumulates_satisfied_set(self, example1_5x10):
        trace = solve_cyclic(example1_5x10, np.zeros(5), SolverConfig())
        assert trace.outcome is Outcome.CONVERGED
        assert trace.iterations == 10
        assert trace.nT == 20
        assert [record.component for record in trace.records[:3]] == [10, 1, 2]
        assert [len(record.active_set) for record in trace.records] == list(range(1, 11))

    @pytest.mark.parametrize("example", [1, 2])
    def test_convergence_n5_m10(self, example):
        system = generate(example, RandomSpec(n=5, m=10, seed=7))
        trace = solve_cyclic(system, np.ones(5), solution_config(5))
        assert trace.outcome is Outcome.CONVERGED
        assert trace.iterations <= 10000
        assert np.linalg.norm(trace.x_final) <= 1e-3

    @pytest.mark.parametrize("solve", [solve_parallel, solve_cyclic])
    def test_residual_stop_yields_a_solution(self, example1_5x10, solve):
        cfg = SolverConfig(k_max=5000, eps_res=1e-7, eps_fix=1e-13)
        trace = solve(example1_5x10, np.ones(5), cfg)
        if trace.stop_reason == "residual":
            assert verify_solution(example1_5x10, trace.x_final, cfg.beta_min, 10 * cfg.eps_res)
            assert np.max(residual(example1_5x10, trace.x_final, 1.0)) <= 1e-7
        else:
            assert trace.outcome in (Outcome.FIXED_POINT, Outcome.MAX_ITERATIONS)

    def test_one_component_per_iteration(self, example2_5x10):
        trace = solve_cyclic(example2_5x10, np.ones(5), solution_config(5, k_max=25))
        for record in trace.records:
            if record.halfspaces:
                assert list(record.halfspaces) == [rho(record.k, 10)]
            assert np.count_nonzero(~np.isnan(record.residuals)) <= 1


@pytest.mark.parametrize("seed", range(5))
def test_single_component_algorithms_coincide(seed):
    system = gen_example1(RandomSpec(n=3, m=1, seed=seed))
    cfg = solution_config(3)
    parallel = solve_parallel(system, np.ones(3), cfg)
    cyclic = solve_cyclic(system, np.ones(3), cfg)
    assert parallel.iterations == cyclic.iterations
    assert parallel.nT == cyclic.nT
    for a, b in zip(parallel.records, cyclic.records):
        assert_array_equal(a.x, b.x)


class TestErrors:

    def test_line_search_failure_is_reported(self, toy_system):
        cfg = SolverConfig(delta=0.9, j_max=2)
        for solve in (solve_parallel, solve_cyclic):
            trace = solve(toy_system, [1.0, 0.0], cfg)
            assert trace.outcome is Outcome.ERROR
            assert trace.failed_iteration == 0
            assert trace.error.startswith("LineSearchFailure")

    def test_non_finite_operator(self):
        broken = FunctionOperator(lambda x: np.full(2, np.nan), 2, "nan")
        system = InclusionSystem([(broken, ZeroSetValuedOperator(2))], Polyhedron.box(-np.ones(2), np.ones(2)))
        trace = solve_parallel(system, [0.5, 0.5], SolverConfig())
        assert trace.outcome is Outcome.ERROR
        assert trace.failed_iteration == 0
        assert "NumericError" in trace.error

    def test_bad_start_raises(self, toy_system):
        with pytest.raises(ContractViolation):
            solve_parallel(toy_system, [1.0, 2.0, 3.0], SolverConfig())


SUITE = [(1, 2, 0), (1, 5, 1), (1, 10, 2), (2, 2, 3), (2, 5, 4), (2, 10, 5)]


@pytest.fixture(scope="module", params=[(ex, n, seed, name) for ex, n, seed in SUITE for name in ALGORITHMS],
                ids=lambda p: f"ex{p[0]}-n{p[1]}-s{p[2]}-{p[3]}")
def suite_run(request):
    example, n, seed, name = request.param
    system = generate(example, RandomSpec(n=n, m=10, seed=seed))
    cfg = solution_config(n, k_max=20000)
    return system, cfg, ALGORITHMS[name](system, np.ones(n), cfg)


class TestRunInvariants:

    def test_converges(self, suite_run):
        _, _, trace = suite_run
        assert trace.outcome is Outcome.CONVERGED
        assert trace.records[-1].fejer_dist <= 1e-3

    def test_fejer_monotone(self, suite_run):
        _, _, trace = suite_run
        assert diagnostics.fejer_violations(trace) == []

    def test_halfspaces_contain_the_solution(self, suite_run):
        system, _, trace = suite_run
        assert diagnostics.separation_violations(trace, np.zeros(system.n)) == []

    def test_descent_bound(self, suite_run):
        _, _, trace = suite_run
        assert diagnostics.descent_bound_violations(trace, 1e-9) == []

    def test_line_searches(self, suite_run):
        _, cfg, trace = suite_run
        for record in trace.records:
            for search in record.searches.values():
                assert search.j <= 60
                assert search.alpha == cfg.theta ** search.j
                assert search.accepted_margin >= 0
                if search.j >= 1:
                    lhs, rhs = search.history[-2]
                    assert lhs < rhs
                assert np.linalg.norm(search.ubar) <= cfg.R

    def test_iterates_stay_in_x(self, suite_run):
        system, _, trace = suite_run
        for record in trace.records:
            assert system.X.contains(record.x, 1e-7)
        assert system.X.contains(trace.x_final, 1e-7)

    def test_steps_vanish(self, suite_run):
        _, _, trace = suite_run
        assert diagnostics.steps_vanish(trace)

    def test_evaluation_counts(self, suite_run):
        system, _, trace = suite_run
        assert sum(r.a_evals + r.resolvent_evals for r in trace.records) == trace.nT
        assert trace.records[-1].nT_cum == trace.nT
        for record in trace.records[:-1]:
            searched = sum(search.a_evals for search in record.searches.values())
            components = system.m if record.component is None else 1
            assert record.a_evals + record.resolvent_evals == 2 * components + searched


def median_iterations(example, solve):
    counts = []
    for seed in range(5):
        system = generate(example, RandomSpec(n=5, m=10, seed=seed))
        counts.append(solve(system, np.ones(5), solution_config(5)).iterations)
    return float(np.median(counts))


@pytest.mark.parametrize("example,solve,reference", [
    (1, solve_parallel, 22), (1, solve_cyclic, 100),
    (2, solve_parallel, 21), (2, solve_cyclic, 80),
])
def test_iteration_counts_order_of_magnitude(example, solve, reference):
    median = median_iterations(example, solve)
    assert reference / 20 <= median <= reference * 20


@pytest.mark.parametrize("seed", range(5))
@pytest.mark.parametrize("example", [1, 2])
def test_parallel_halfspace_projection_is_exact(example, seed):
    system = generate(example, RandomSpec(n=2, m=10, seed=seed))
    cfg = solution_config(2)
    trace = solve_parallel(system, np.ones(2), cfg)
    for record in trace.records[:6]:
        spaces = [hs for hs in record.halfspaces.values() if not hs.degenerate]
        if not spaces:
            continue
        # Unit normals keep the enumeration's feasibility slack in distance units
        forms = [hs.offset_form() for hs in spaces]
        G = np.vstack([unit for unit, _ in forms])
        h = np.array([offset for _, offset in forms])
        expected = project_by_enumeration(record.x, G, h)
        assert_allclose(project_intersection(record.x, spaces, cfg.eps_proj), expected, atol=1e-6)
