"""
RatSwarm - RSO / MRSO 탐색 루프

반복 t = 1..T:
  1. 계수(R, C, A) 한 번 추출
  2. 개체 i 순서대로 추격(chase) → 공격(fight) → 경계 고정 → 평가
  3. 전역 최적(gbest)은 엄격히 개선될 때만, 즉시 갱신
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional

import numpy as np

from ...config.settings import DEFAULT_ITERATIONS, DEFAULT_POPULATION
from ..errors import DimensionError
from ..problem import (
    Problem,
    as_comparable,
    clamp_to_bounds,
    evaluate_candidate,
    init_population,
    round_integer_dims,
)
from ..rng import RngStream
from .coefficients import (
    IterationCoefficients,
    draw_coefficients_mrso,
    draw_coefficients_rso,
)

MAX_SEED = 2 ** 64


class Algorithm(Enum):
    """탐색 알고리즘"""
    RSO = "rso"
    MRSO = "mrso"

    @classmethod
    def parse(cls, name: str) -> "Algorithm":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"지원하지 않는 알고리즘: {name}") from None


COEFFICIENT_SCHEDULES = {
    Algorithm.RSO: draw_coefficients_rso,
    Algorithm.MRSO: draw_coefficients_mrso,
}


@dataclass(frozen=True)
class RunConfig:
    """단일 실행 설정"""
    algorithm: Algorithm = Algorithm.MRSO
    population: int = DEFAULT_POPULATION     # N
    max_iterations: int = DEFAULT_ITERATIONS  # T
    seed: int = 0
    stream_offset: int = 0                   # (알고리즘, 문제) 쌍별 오프셋
    run_index: int = 0

    def __post_init__(self):
        if isinstance(self.algorithm, str):
            object.__setattr__(self, "algorithm", Algorithm.parse(self.algorithm))
        if self.population < 2:
            raise ValueError(f"개체 수는 2 이상이어야 합니다: {self.population}")
        if self.max_iterations < 1:
            raise ValueError(f"반복 수는 1 이상이어야 합니다: {self.max_iterations}")
        if not 0 <= self.seed < MAX_SEED:
            raise ValueError(f"시드는 64비트 범위여야 합니다: {self.seed}")

    def to_dict(self) -> dict:
        return {
            "algorithm": self.algorithm.value,
            "population": self.population,
            "max_iterations": self.max_iterations,
            "seed": self.seed,
            "stream_offset": self.stream_offset,
            "run_index": self.run_index,
        }


@dataclass
class SwarmState:
    """개체군 상태"""
    positions: np.ndarray         # (N, dim)
    fitness: np.ndarray           # (N,)
    gbest: np.ndarray
    gbest_fitness: float
    t: int = 0
    evaluations: int = 0

    def copy(self) -> "SwarmState":
        return SwarmState(
            positions=self.positions.copy(),
            fitness=self.fitness.copy(),
            gbest=self.gbest.copy(),
            gbest_fitness=self.gbest_fitness,
            t=self.t,
            evaluations=self.evaluations,
        )


@dataclass
class RunRecord:
    """단일 실행 결과"""
    config: RunConfig
    history: List[float] = field(default_factory=list)   # 반복별 gbest 적합도
    final_position: List[float] = field(default_factory=list)
    final_fitness: float = float("inf")
    evaluations: int = 0

    @property
    def run_index(self) -> int:
        return self.config.run_index

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "history": list(self.history),
            "final_position": list(self.final_position),
            "final_fitness": self.final_fitness,
            "evaluations": self.evaluations,
        }


def _check_pair(a: np.ndarray, b: np.ndarray):
    if a.shape != b.shape:
        raise DimensionError(f"벡터 길이 불일치: {a.shape} != {b.shape}")


def chase(position: np.ndarray, gbest: np.ndarray, coeff: IterationCoefficients) -> np.ndarray:
    """추격: P = A·P_i + C·(P_r - P_i)"""
    position = np.asarray(position, dtype=float)
    gbest = np.asarray(gbest, dtype=float)
    _check_pair(position, gbest)
    return coeff.A * position + coeff.C * (gbest - position)


def fight(gbest: np.ndarray, p: np.ndarray) -> np.ndarray:
    """공격: |gbest - P| (성분별 절댓값)"""
    gbest = np.asarray(gbest, dtype=float)
    p = np.asarray(p, dtype=float)
    _check_pair(gbest, p)
    return np.abs(gbest - p)


def initialize_swarm(
    problem: Problem,
    population: int,
    rng: RngStream,
    noise_rng: Optional[RngStream] = None,
) -> SwarmState:
    """초기 개체군 생성 + 평가 + 최적 개체 선택"""
    positions = init_population(rng, problem.space, population)
    fitness = np.array(
        [as_comparable(evaluate_candidate(problem, x, noise_rng)) for x in positions]
    )
    best = int(np.argmin(fitness))

    return SwarmState(
        positions=positions,
        fitness=fitness,
        gbest=positions[best].copy(),
        gbest_fitness=float(fitness[best]),
        t=0,
        evaluations=population,
    )


def step(
    state: SwarmState,
    problem: Problem,
    coeff: IterationCoefficients,
    noise_rng: Optional[RngStream] = None,
) -> SwarmState:
    """
    한 반복의 개체 갱신

    Args:
        state: 현재 상태 (변경하지 않음)
        problem: 문제
        coeff: 이번 반복 계수
        noise_rng: 잡음 문제용 하위 스트림

    Returns:
        갱신된 새 SwarmState
    """
    new_state = state.copy()

    for i in range(new_state.positions.shape[0]):
        p = chase(new_state.positions[i], new_state.gbest, coeff)
        candidate = clamp_to_bounds(fight(new_state.gbest, p), problem.space)
        value = as_comparable(evaluate_candidate(problem, candidate, noise_rng))

        # 위치는 무조건 교체
        new_state.positions[i] = candidate
        new_state.fitness[i] = value

        # 엄격 개선 시 즉시 갱신 (다음 개체는 새 gbest를 추격)
        if value < new_state.gbest_fitness:
            new_state.gbest = candidate.copy()
            new_state.gbest_fitness = value

    new_state.evaluations += new_state.positions.shape[0]
    new_state.t += 1
    return new_state


class RatSwarmOptimizer:
    """RSO / MRSO 단일 실행기"""

    def __init__(
        self,
        problem: Problem,
        config: RunConfig,
        callback: Optional[Callable[[SwarmState], None]] = None,
    ):
        """
        Args:
            problem: 최적화 문제
            config: 실행 설정
            callback: 반복마다 호출 (수렴 추적용, 선택)
        """
        self.problem = problem
        self.config = config
        self.callback = callback
        self._draw = COEFFICIENT_SCHEDULES[config.algorithm]

    def run(self) -> RunRecord:
        """초기화 후 T번 반복, 결정적"""
        config = self.config
        rng = RngStream(config.seed, config.stream_offset)
        noise_rng = rng.spawn()

        state = initialize_swarm(self.problem, config.population, rng, noise_rng)
        history = []

        T = config.max_iterations
        for t in range(1, T + 1):
            coeff = self._draw(rng, t, T)
            state = step(state, self.problem, coeff, noise_rng)
            history.append(state.gbest_fitness)

            if self.callback is not None:
                self.callback(state)

        final_position = round_integer_dims(state.gbest, self.problem)

        return RunRecord(
            config=config,
            history=history,
            final_position=final_position.tolist(),
            final_fitness=history[-1],
            evaluations=state.evaluations,
        )


def run(problem: Problem, config: RunConfig) -> RunRecord:
    """problem에 대해 config 설정으로 한 번 실행"""
    return RatSwarmOptimizer(problem, config).run()
