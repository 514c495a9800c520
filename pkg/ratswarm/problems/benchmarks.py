"""
RatSwarm - 고전 벤치마크 함수 23종 (F1-F23)

차원/범위/f_min 은 BENCHMARKS 표 기준 (통용 범위와 달라도 유지)
F7의 random[0,1] 항은 호출자의 난수 스트림에서 뽑는다
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..core.errors import DimensionError, UnknownIdError
from ..core.problem import Problem, SearchSpace
from ..core.rng import RngStream
from .constants import CONSTANTS


def _penalty_u(x: np.ndarray, a: float, k: float, m: float) -> np.ndarray:
    """F12/F13 경계 벌점 u(x, a, k, m)"""
    return np.where(
        x > a,
        k * (x - a) ** m,
        np.where(x < -a, k * (-x - a) ** m, 0.0),
    )


# ==================== 단봉 (F1-F7) ====================

def sphere(x: np.ndarray) -> float:
    return float(np.sum(x ** 2))


def schwefel_2_22(x: np.ndarray) -> float:
    ax = np.abs(x)
    return float(np.sum(ax) + np.prod(ax))


def schwefel_1_2(x: np.ndarray) -> float:
    return float(np.sum(np.cumsum(x) ** 2))


def schwefel_2_21(x: np.ndarray) -> float:
    return float(np.max(np.abs(x)))


def rosenbrock(x: np.ndarray) -> float:
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def step_function(x: np.ndarray) -> float:
    # [x + 0.5] 는 수학적 floor
    return float(np.sum(np.floor(x + 0.5) ** 2))


def quartic(x: np.ndarray) -> float:
    """잡음 없는 부분: Σ i·x_i⁴"""
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x ** 4))


# ==================== 다봉 (F8-F16) ====================

def schwefel_2_26(x: np.ndarray) -> float:
    return float(np.sum(-x * np.sin(np.sqrt(np.abs(x)))))


def rastrigin(x: np.ndarray) -> float:
    return float(np.sum(x ** 2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def ackley(x: np.ndarray) -> float:
    n = x.size
    return float(
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x ** 2) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0
        + np.e
    )


def griewank(x: np.ndarray) -> float:
    i = np.arange(1, x.size + 1)
    return float(np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def penalized_1(x: np.ndarray) -> float:
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / n * core + np.sum(_penalty_u(x, 10.0, 100.0, 4.0)))


def penalized_2(x: np.ndarray) -> float:
    core = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * core + np.sum(_penalty_u(x, 5.0, 100.0, 4.0)))


def foxholes(x: np.ndarray) -> float:
    a = CONSTANTS.foxholes_a
    j = np.arange(1, a.shape[1] + 1)
    inner = j + np.sum((x[:, None] - a) ** 6, axis=0)
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / inner)))


def kowalik(x: np.ndarray) -> float:
    a, b = CONSTANTS.kowalik_a, CONSTANTS.kowalik_b
    with np.errstate(divide="ignore", invalid="ignore"):
        model = x[0] * (b ** 2 + b * x[1]) / (b ** 2 + b * x[2] + x[3])
    return float(np.sum((a - model) ** 2))


def six_hump_camel(x: np.ndarray) -> float:
    x1, x2 = x[0], x[1]
    return float(4 * x1 ** 2 - 2.1 * x1 ** 4 + x1 ** 6 / 3 + x1 * x2 - 4 * x2 ** 2 + 4 * x2 ** 4)


# ==================== 고정 차원 (F17-F23) ====================

def branin(x: np.ndarray) -> float:
    x1, x2 = x[0], x[1]
    return float(
        (x2 - 5.1 / (4 * np.pi ** 2) * x1 ** 2 + 5 / np.pi * x1 - 6) ** 2
        + 10 * (1 - 1 / (8 * np.pi)) * np.cos(x1)
        + 10
    )


def goldstein_price(x: np.ndarray) -> float:
    x1, x2 = x[0], x[1]
    left = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1 ** 2 - 14 * x2 + 6 * x1 * x2 + 3 * x2 ** 2)
    right = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1 ** 2 + 48 * x2 - 36 * x1 * x2 + 27 * x2 ** 2)
    return float(left * right)


def _hartmann(x: np.ndarray, a: np.ndarray, c: np.ndarray, p: np.ndarray) -> float:
    return float(-np.sum(c * np.exp(-np.sum(a * (x - p) ** 2, axis=1))))


def hartmann_3(x: np.ndarray) -> float:
    return _hartmann(x, CONSTANTS.hartmann3_a, CONSTANTS.hartmann3_c, CONSTANTS.hartmann3_p)


def hartmann_6(x: np.ndarray) -> float:
    return _hartmann(x, CONSTANTS.hartmann6_a, CONSTANTS.hartmann6_c, CONSTANTS.hartmann6_p)


def _shekel(x: np.ndarray, m: int) -> float:
    alpha, c = CONSTANTS.shekel(m)
    diff = x - alpha
    return float(-np.sum(1.0 / (np.sum(diff * diff, axis=1) + c)))


def shekel_5(x: np.ndarray) -> float:
    return _shekel(x, 5)


def shekel_7(x: np.ndarray) -> float:
    return _shekel(x, 7)


def shekel_10(x: np.ndarray) -> float:
    return _shekel(x, 10)


# ==================== 명세 표 ====================

@dataclass(frozen=True)
class BenchmarkSpec:
    """벤치마크 함수 정의"""
    id: str
    name: str
    evaluator: Callable[[np.ndarray], float]
    dim: int
    bounds: Tuple[float, float]
    f_min: float
    category: str                                  # "unimodal" | "multimodal" | "fixed-dimension"
    minimizer: Optional[Tuple[float, ...]] = None  # 알려진 최소점 (검증용)
    noisy: bool = False
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def lower(self) -> float:
        return self.bounds[0]

    @property
    def upper(self) -> float:
        return self.bounds[1]

    def known_minimizer(self) -> Optional[np.ndarray]:
        if self.minimizer is None:
            return None
        if len(self.minimizer) == 1:
            return np.full(self.dim, self.minimizer[0])
        return np.array(self.minimizer, dtype=float)


BENCHMARKS: Dict[str, BenchmarkSpec] = {
    spec.id: spec for spec in [
        BenchmarkSpec("F1", "Sphere", sphere, 10, (-100.0, 100.0), 0.0, "unimodal", (0.0,)),
        BenchmarkSpec("F2", "Schwefel 2.22", schwefel_2_22, 10, (-10.0, 10.0), 0.0, "unimodal", (0.0,)),
        BenchmarkSpec("F3", "Schwefel 1.2", schwefel_1_2, 10, (-30.0, 30.0), 0.0, "unimodal", (0.0,)),
        BenchmarkSpec("F4", "Schwefel 2.21", schwefel_2_21, 10, (-100.0, 100.0), 0.0, "unimodal", (0.0,)),
        BenchmarkSpec("F5", "Rosenbrock", rosenbrock, 10, (-30.0, 30.0), 0.0, "unimodal", (1.0,)),
        BenchmarkSpec("F6", "Step", step_function, 10, (-100.0, 100.0), 0.0, "unimodal", (0.0,)),
        BenchmarkSpec("F7", "Quartic with noise", quartic, 10, (-1.28, 1.28), 0.0, "unimodal", (0.0,), noisy=True),
        BenchmarkSpec("F8", "Schwefel 2.26", schwefel_2_26, 10, (-500.0, 500.0), -418.9829 * 10, "multimodal",
                      (420.9687,), notes=("f_min = -418.9829 * dim",)),
        BenchmarkSpec("F9", "Rastrigin", rastrigin, 10, (-10.0, 10.0), 0.0, "multimodal", (0.0,)),
        BenchmarkSpec("F10", "Ackley", ackley, 10, (-32.0, 32.0), 0.0, "multimodal", (0.0,)),
        BenchmarkSpec("F11", "Griewank", griewank, 10, (-600.0, 600.0), 0.0, "multimodal", (0.0,)),
        BenchmarkSpec("F12", "Penalized 1", penalized_1, 10, (-50.0, 50.0), 0.0, "multimodal", (-1.0,),
                      notes=("first term uses sin^2",)),
        BenchmarkSpec("F13", "Penalized 2", penalized_2, 30, (-50.0, 50.0), 0.0, "multimodal", (1.0,),
                      notes=("sum uses sin^2(3*pi*x_{i+1}), i < n",)),
        BenchmarkSpec("F14", "Shekel foxholes", foxholes, 2, (-65.0, 65.0), 1.0, "multimodal", (-32.0, -32.0)),
        BenchmarkSpec("F15", "Kowalik", kowalik, 4, (-5.0, 5.0), 0.0003, "multimodal",
                      (0.1928, 0.1908, 0.1231, 0.1358)),
        BenchmarkSpec("F16", "Six-hump camel", six_hump_camel, 2, (-5.0, 5.0), -1.0316, "multimodal",
                      (0.08984, -0.7126)),
        BenchmarkSpec("F17", "Branin", branin, 2, (-5.0, 5.0), 0.398, "fixed-dimension", (np.pi, 2.275)),
        BenchmarkSpec("F18", "Goldstein-Price", goldstein_price, 2, (-2.0, 2.0), 3.0, "fixed-dimension", (0.0, -1.0)),
        BenchmarkSpec("F19", "Hartmann 3", hartmann_3, 3, (1.0, 3.0), -3.86, "fixed-dimension",
                      (0.114614, 0.555649, 0.852547), notes=("range [1, 3] as tabulated",)),
        BenchmarkSpec("F20", "Hartmann 6", hartmann_6, 6, (0.0, 1.0), -3.32, "fixed-dimension",
                      (0.20169, 0.150011, 0.476874, 0.275332, 0.311652, 0.6573)),
        BenchmarkSpec("F21", "Shekel 5", shekel_5, 4, (0.0, 10.0), -10.1532, "fixed-dimension", (4.0, 4.0, 4.0, 4.0)),
        BenchmarkSpec("F22", "Shekel 7", shekel_7, 4, (0.0, 10.0), -10.4028, "fixed-dimension", (4.0, 4.0, 4.0, 4.0)),
        BenchmarkSpec("F23", "Shekel 10", shekel_10, 4, (0.0, 10.0), -10.536, "fixed-dimension", (4.0, 4.0, 4.0, 4.0)),
    ]
}

CLASSICAL_IDS: List[str] = list(BENCHMARKS.keys())


def get_benchmark_spec(fid: str) -> BenchmarkSpec:
    """ID(대소문자 무관)로 벤치마크 명세 조회"""
    key = fid.upper()
    if key not in BENCHMARKS:
        raise UnknownIdError(f"알 수 없는 벤치마크 함수: {fid}")
    return BENCHMARKS[key]


def evaluate_classical(fid: str, x: np.ndarray, rng: Optional[RngStream] = None) -> float:
    """
    벤치마크 함수 값 계산

    Args:
        fid: "F1".."F23"
        x: 길이 dim 벡터
        rng: F7 잡음용 스트림 (없으면 전역 numpy 난수)

    Returns:
        함수 값
    """
    spec = get_benchmark_spec(fid)
    x = np.asarray(x, dtype=float)
    if x.shape != (spec.dim,):
        raise DimensionError(f"{spec.id}: 벡터 길이 {x.size} != 차원 {spec.dim}")

    value = spec.evaluator(x)
    if spec.noisy:
        value += float(rng.random() if rng is not None else np.random.random())
    return value


def make_problem(spec: BenchmarkSpec) -> Problem:
    """BenchmarkSpec → Problem"""
    return Problem(
        name=spec.id,
        space=SearchSpace.uniform(spec.dim, spec.lower, spec.upper),
        objective=spec.evaluator,
        known_best=spec.f_min,
        noise_amplitude=1.0 if spec.noisy else 0.0,
        category=spec.category,
        corrections=spec.notes,
    )


def make_classical_suite() -> List[Problem]:
    """F1-F23 전체 Problem 목록"""
    return [make_problem(spec) for spec in BENCHMARKS.values()]
