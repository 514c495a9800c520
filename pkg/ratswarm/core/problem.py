"""
RatSwarm - 문제 모델
탐색 공간, 목적/제약 함수, 초기 개체군, 경계 처리, 벌점 적합도
"""
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import PENALTY_LAMBDA
from .errors import DimensionError, InvalidRangeError
from .rng import RngStream

Objective = Callable[[np.ndarray], float]
Constraint = Callable[[np.ndarray], float]


@dataclass(frozen=True, eq=False)
class SearchSpace:
    """상자형 탐색 공간"""
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.array(self.lower, dtype=float).ravel()
        upper = np.array(self.upper, dtype=float).ravel()

        if lower.size < 1:
            raise DimensionError("차원은 1 이상이어야 합니다")
        if lower.shape != upper.shape:
            raise DimensionError(f"하한/상한 길이 불일치: {lower.size} != {upper.size}")
        if not np.all(lower < upper):
            raise InvalidRangeError("모든 차원에서 하한 < 상한이어야 합니다")

        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, dim: int, low: float, high: float) -> "SearchSpace":
        """모든 차원이 같은 구간인 공간"""
        return cls(np.full(dim, low, dtype=float), np.full(dim, high, dtype=float))

    @property
    def dim(self) -> int:
        return int(self.lower.size)

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lower": self.lower.tolist(),
            "upper": self.upper.tolist(),
        }


@dataclass(frozen=True, eq=False)
class Problem:
    """최적화 문제 (모든 최적화기가 소비하는 단위)"""
    name: str
    space: SearchSpace
    objective: Objective
    constraints: Tuple[Constraint, ...] = ()      # g_i(x) <= 0 이면 만족
    integer_dims: frozenset = frozenset()         # 평가 시 정수 반올림
    discrete_steps: Tuple[Tuple[int, float], ...] = ()  # (차원, 단위) 배수로 스냅
    known_best: Optional[float] = None
    noise_amplitude: float = 0.0                  # F7 전용 가산 잡음 [0, amplitude)
    category: str = ""
    corrections: Tuple[str, ...] = ()             # 원 수식 대비 수정 내역

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        object.__setattr__(self, "integer_dims", frozenset(self.integer_dims))
        object.__setattr__(self, "discrete_steps", tuple(self.discrete_steps))
        object.__setattr__(self, "corrections", tuple(self.corrections))

        dims = set(self.integer_dims) | {d for d, _ in self.discrete_steps}
        if any(d < 0 or d >= self.space.dim for d in dims):
            raise DimensionError(f"{self.name}: 정수/이산 차원 인덱스가 범위를 벗어났습니다")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_constrained(self) -> bool:
        return len(self.constraints) > 0

    def constraint_values(self, x: np.ndarray) -> np.ndarray:
        """모든 g_i(x) 값"""
        return np.array([g(x) for g in self.constraints], dtype=float)

    def to_dict(self) -> dict:
        """메타데이터 딕셔너리 (목적 함수 제외)"""
        return {
            "name": self.name,
            "category": self.category,
            **self.space.to_dict(),
            "constraints": len(self.constraints),
            "integer_dims": sorted(self.integer_dims),
            "discrete_steps": [list(step) for step in self.discrete_steps],
            "known_best": self.known_best,
            "corrections": list(self.corrections),
        }


def _check_length(x: np.ndarray, space: SearchSpace) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (space.dim,):
        raise DimensionError(f"벡터 길이 {x.size} != 차원 {space.dim}")
    return x


def init_population(rng: RngStream, space: SearchSpace, n: int) -> np.ndarray:
    """
    초기 개체군 생성: x_ij = lower_j + (upper_j - lower_j) * u_ij

    Args:
        rng: 난수 스트림
        space: 탐색 공간
        n: 개체 수

    Returns:
        (n, dim) 배열, 모든 성분은 [lower, upper) 안
    """
    if n < 1:
        raise ValueError(f"개체 수는 1 이상이어야 합니다: {n}")

    u = rng.random((n, space.dim))
    population = space.lower + (space.upper - space.lower) * u
    # 반올림으로 상한에 닿는 경우 방지
    return np.minimum(population, np.nextafter(space.upper, space.lower))


def clamp_to_bounds(x: np.ndarray, space: SearchSpace) -> np.ndarray:
    """경계 밖 성분을 가장 가까운 경계로 이동"""
    x = _check_length(x, space)
    return np.clip(x, space.lower, space.upper)


def round_integer_dims(x: np.ndarray, problem: Problem) -> np.ndarray:
    """
    정수 차원은 가장 가까운 정수(짝수 우선)로, 이산 차원은 단위 배수로 스냅

    Returns:
        경계 안으로 다시 자른 벡터
    """
    x = _check_length(x, problem.space)
    if not problem.integer_dims and not problem.discrete_steps:
        return x

    rounded = x.copy()
    if problem.integer_dims:
        idx = sorted(problem.integer_dims)
        rounded[idx] = np.rint(rounded[idx])
    for dim, step in problem.discrete_steps:
        rounded[dim] = np.rint(rounded[dim] / step) * step

    return np.clip(rounded, problem.space.lower, problem.space.upper)


def constraint_violation(problem: Problem, x: np.ndarray) -> float:
    """총 위반량 sum(max(0, g_i(x))), 실행 가능이면 0"""
    if not problem.constraints:
        return 0.0
    return float(np.sum(np.maximum(0.0, problem.constraint_values(x))))


def penalized_fitness(
    problem: Problem,
    x: np.ndarray,
    noise_rng: Optional[RngStream] = None,
) -> float:
    """
    정적 2차 벌점 적합도: f(x) + λ · Σ max(0, g_i(x))²

    Args:
        problem: 문제
        x: 평가할 벡터 (정수 차원은 이미 반올림된 상태)
        noise_rng: 잡음 문제(F7)용 하위 스트림

    Returns:
        적합도 (비유한 값은 그대로 전달)
    """
    value = float(problem.objective(x))

    if problem.noise_amplitude > 0.0:
        draw = noise_rng.random() if noise_rng is not None else np.random.random()
        value += problem.noise_amplitude * float(draw)

    if problem.constraints:
        violations = np.maximum(0.0, problem.constraint_values(x))
        value += PENALTY_LAMBDA * float(np.sum(violations ** 2))

    return value


def evaluate_candidate(
    problem: Problem,
    x: np.ndarray,
    noise_rng: Optional[RngStream] = None,
) -> float:
    """연속 탐색 위치를 반올림한 뒤 벌점 적합도로 평가"""
    return penalized_fitness(problem, round_integer_dims(x, problem), noise_rng)


def as_comparable(fitness: float) -> float:
    """NaN → +inf (비교 시 최악 취급)"""
    return float("inf") if np.isnan(fitness) else float(fitness)


def problem_from_bounds(
    name: str,
    lower: Sequence[float],
    upper: Sequence[float],
    objective: Objective,
    **kwargs,
) -> Problem:
    """경계 목록으로 Problem 생성"""
    return Problem(name=name, space=SearchSpace(np.asarray(lower), np.asarray(upper)), objective=objective, **kwargs)
