"""
RatSwarm - RSO / MRSO 계수와 탐색 루프 테스트
"""
import numpy as np
import pytest

from ratswarm.core.errors import DimensionError
from ratswarm.core.optimizers import (
    Algorithm,
    IterationCoefficients,
    RatSwarmOptimizer,
    RunConfig,
    SwarmState,
    chase,
    draw_coefficients_mrso,
    draw_coefficients_rso,
    fight,
    initialize_swarm,
    mrso_coefficients,
    rso_coefficients,
    run,
    step,
)
from ratswarm.core.rng import RngStream
from ratswarm.problems.registry import get_problem, list_problem_ids


# ==================== 계수 ====================

class TestRsoCoefficients:
    def test_zero_at_last_iteration(self, rng):
        for T in (1, 7, 500):
            assert draw_coefficients_rso(rng, T, T).A == 0.0

    def test_first_iteration(self):
        assert rso_coefficients(5.0, 1.0, 1, 500).A == pytest.approx(4.99)

    def test_midpoint(self):
        assert rso_coefficients(4.0, 1.0, 250, 500).A == pytest.approx(2.0)

    def test_strictly_decreasing_for_fixed_r(self):
        values = [rso_coefficients(3.0, 1.0, t, 20).A for t in range(1, 21)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_draw_ranges(self, rng):
        for t in range(1, 101):
            coeff = draw_coefficients_rso(rng, t, 100)
            assert 1.0 <= coeff.R < 5.0
            assert 0.0 <= coeff.C < 2.0
            assert coeff.f1 is None

    @pytest.mark.parametrize("t, T", [(0, 10), (11, 10), (1, 0)])
    def test_iteration_out_of_range(self, rng, t, T):
        with pytest.raises(ValueError):
            draw_coefficients_rso(rng, t, T)


class TestMrsoCoefficients:
    def test_zero_at_last_iteration(self, rng):
        coeff = draw_coefficients_mrso(rng, 500, 500)
        assert coeff.f2 == 0.0
        assert coeff.A == 0.0

    def test_forced_draw(self):
        coeff = mrso_coefficients(R=5.0, u1=1.0, u2=0.0, C=1.0, t=1, T=500)
        assert coeff.f1 == pytest.approx(5.0)
        assert coeff.f2 == pytest.approx(0.998)
        assert coeff.f3 == pytest.approx(2.0)
        assert coeff.A == pytest.approx(9.98)

    def test_zero_uniforms(self):
        assert mrso_coefficients(R=3.0, u1=0.0, u2=0.0, C=1.0, t=5, T=10).A == 0.0

    def test_factor_ranges(self, rng):
        for t in range(1, 51):
            coeff = draw_coefficients_mrso(rng, t, 50)
            assert 0.0 <= coeff.f1 <= coeff.R
            assert 0.0 <= coeff.f2 <= 1.0
            assert -1.0 < coeff.f3 < 2.0
            assert abs(coeff.A) <= coeff.R * coeff.f2 * 2.0

    def test_draw_order(self):
        """R, u1, u2, C 순서로 뽑는다"""
        coeff = draw_coefficients_mrso(RngStream(seed=11), 3, 10)
        manual = RngStream(seed=11)
        R = manual.uniform(1.0, 5.0)
        u1 = manual.uniform(0.0, 1.0)
        u2 = manual.uniform(0.0, 1.0)
        C = manual.uniform(0.0, 2.0)
        assert coeff == mrso_coefficients(R, u1, u2, C, 3, 10)


# ==================== chase / fight ====================

class TestChaseFight:
    def test_chase_zero_a(self):
        coeff = IterationCoefficients(R=1.0, C=1.0, A=0.0)
        np.testing.assert_allclose(chase(np.array([1.0, 2.0]), np.array([4.0, -1.0]), coeff), [3.0, -3.0])

    def test_chase_at_gbest(self):
        coeff = IterationCoefficients(R=1.0, C=1.7, A=0.3)
        g = np.array([2.0, -4.0])
        np.testing.assert_allclose(chase(g, g, coeff), 0.3 * g)

    def test_chase_identity(self):
        coeff = IterationCoefficients(R=1.0, C=0.0, A=1.0)
        x = np.array([5.0, -6.0, 7.0])
        np.testing.assert_array_equal(chase(x, np.zeros(3), coeff), x)

    def test_fight_examples(self):
        np.testing.assert_array_equal(fight(np.array([2.0, -3.0]), np.array([5.0, 1.0])), [3.0, 4.0])
        np.testing.assert_array_equal(fight(np.zeros(2), np.array([-2.0, 3.0])), [2.0, 3.0])
        g = np.array([1.5, -2.5])
        np.testing.assert_array_equal(fight(g, g), [0.0, 0.0])

    def test_length_mismatch(self):
        coeff = IterationCoefficients(R=1.0, C=1.0, A=1.0)
        with pytest.raises(DimensionError):
            chase(np.zeros(2), np.zeros(3), coeff)
        with pytest.raises(DimensionError):
            fight(np.zeros(2), np.zeros(3))

    def test_positive_homogeneity(self, random_points):
        coeff = IterationCoefficients(R=2.0, C=0.8, A=-0.6)
        x, g = random_points.normal(size=(2, 5))
        s = 3.7
        np.testing.assert_allclose(chase(s * x, s * g, coeff), s * chase(x, g, coeff))
        np.testing.assert_allclose(fight(s * g, s * x), s * fight(g, x))


# ==================== step ====================

def _state_at(positions, problem, gbest):
    fitness = np.array([problem.objective(p) for p in positions])
    return SwarmState(
        positions=np.array(positions, dtype=float),
        fitness=fitness,
        gbest=np.array(gbest, dtype=float),
        gbest_fitness=problem.objective(np.array(gbest, dtype=float)),
    )


class TestStep:
    def test_fixed_point_at_optimum(self, sphere_problem):
        state = _state_at(np.zeros((5, 10)), sphere_problem, np.zeros(10))
        coeff = IterationCoefficients(R=3.0, C=1.2, A=1.5)
        new_state = step(state, sphere_problem, coeff)
        np.testing.assert_array_equal(new_state.positions, np.zeros((5, 10)))
        assert new_state.gbest_fitness == 0.0
        assert new_state.t == 1

    def test_zero_coefficients_move_to_abs_gbest(self, sphere_problem, random_points):
        gbest = np.linspace(-5.0, 4.0, 10)
        positions = random_points.uniform(-100, 100, size=(4, 10))
        state = _state_at(positions, sphere_problem, gbest)
        new_state = step(state, sphere_problem, IterationCoefficients(R=1.0, C=0.0, A=0.0))
        for position in new_state.positions:
            np.testing.assert_allclose(position, np.abs(gbest))

    def test_gbest_never_worsens(self, random_points):
        problem = get_problem("F9")
        rng = RngStream(seed=1)
        state = initialize_swarm(problem, 10, rng)
        for t in range(1, 21):
            before = state.gbest_fitness
            state = step(state, problem, draw_coefficients_mrso(rng, t, 20))
            assert state.gbest_fitness <= before
            assert np.all(state.positions >= problem.space.lower)
            assert np.all(state.positions <= problem.space.upper)

    def test_input_state_untouched(self, sphere_problem, random_points):
        state = _state_at(random_points.uniform(-10, 10, size=(3, 10)), sphere_problem, np.ones(10))
        snapshot = state.positions.copy()
        step(state, sphere_problem, IterationCoefficients(R=2.0, C=1.0, A=0.5))
        np.testing.assert_array_equal(state.positions, snapshot)
        assert state.t == 0

    @pytest.mark.parametrize("draw", [draw_coefficients_rso, draw_coefficients_mrso])
    def test_positions_nonnegative_after_first_step(self, draw):
        # F14 최적점 (-32, -32) 은 첫 반복 이후 도달 불가
        problem = get_problem("F14")
        rng = RngStream(seed=11)
        state = initialize_swarm(problem, 30, rng)
        assert np.any(state.positions < 0.0)
        for t in range(1, 11):
            state = step(state, problem, draw(rng, t, 10))
            assert np.all(state.positions >= 0.0)


# ==================== run ====================

class TestRunConfig:
    def test_defaults(self):
        config = RunConfig()
        assert config.population == 30
        assert config.max_iterations == 500
        assert config.algorithm is Algorithm.MRSO

    def test_algorithm_from_string(self):
        assert RunConfig(algorithm="RSO").algorithm is Algorithm.RSO

    @pytest.mark.parametrize("kwargs", [
        {"population": 1},
        {"max_iterations": 0},
        {"seed": -1},
        {"seed": 2 ** 64},
        {"algorithm": "pso"},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)


class TestRun:
    def test_minimal_run(self, sphere_problem):
        config = RunConfig(algorithm="rso", population=2, max_iterations=1, seed=3)
        record = run(sphere_problem, config)
        initial = initialize_swarm(sphere_problem, 2, RngStream(seed=3))
        assert len(record.history) == 1
        assert record.history[0] <= initial.gbest_fitness

    @pytest.mark.parametrize("algorithm", ["rso", "mrso"])
    def test_deterministic(self, sphere_problem, algorithm):
        config = RunConfig(algorithm=algorithm, population=8, max_iterations=30, seed=42, stream_offset=17)
        assert run(sphere_problem, config).to_dict() == run(sphere_problem, config).to_dict()

    def test_noisy_problem_deterministic(self):
        problem = get_problem("F7")
        config = RunConfig(population=5, max_iterations=10, seed=8)
        assert run(problem, config).history == run(problem, config).history

    def test_seed_changes_result(self, sphere_problem):
        a = run(sphere_problem, RunConfig(population=5, max_iterations=5, seed=1))
        b = run(sphere_problem, RunConfig(population=5, max_iterations=5, seed=2))
        assert a.final_position != b.final_position

    @pytest.mark.parametrize("problem_id", ["F1", "F5", "F8", "F14", "F20", "gear_train", "welded_beam"])
    @pytest.mark.parametrize("algorithm", ["rso", "mrso"])
    def test_record_invariants(self, problem_id, algorithm):
        problem = get_problem(problem_id)
        config = RunConfig(algorithm=algorithm, population=6, max_iterations=25, seed=5)
        record = run(problem, config)

        assert len(record.history) == 25
        assert all(b <= a for a, b in zip(record.history, record.history[1:]))
        assert record.final_fitness == record.history[-1]
        assert record.evaluations == 6 * (25 + 1)
        assert problem.space.contains(np.array(record.final_position))

    def test_random_pairs_stay_in_bounds(self):
        picker = np.random.default_rng(2025)
        problem_ids = list_problem_ids()

        for _ in range(100):
            problem = get_problem(problem_ids[int(picker.integers(len(problem_ids)))])
            config = RunConfig(
                algorithm=str(picker.choice(["rso", "mrso"])),
                population=5,
                max_iterations=8,
                seed=int(picker.integers(0, 2 ** 32)),
            )

            def check(state, space=problem.space):
                assert all(space.contains(position) for position in state.positions)
                assert space.contains(state.gbest)

            record = RatSwarmOptimizer(problem, config, callback=check).run()
            assert all(b <= a for a, b in zip(record.history, record.history[1:]))
            assert problem.space.contains(np.array(record.final_position))

    def test_gear_train_reports_integers(self):
        record = run(get_problem("gear_train"), RunConfig(population=6, max_iterations=20, seed=4))
        assert all(float(v).is_integer() for v in record.final_position)

    def test_callback_called_each_iteration(self, sphere_problem):
        seen = []
        optimizer = RatSwarmOptimizer(
            sphere_problem,
            RunConfig(population=4, max_iterations=12, seed=1),
            callback=lambda state: seen.append(state.t),
        )
        optimizer.run()
        assert seen == list(range(1, 13))
