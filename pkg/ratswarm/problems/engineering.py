"""
RatSwarm - 제약 공학 설계 문제 6종

제약식은 문헌 표준형을 따르고, 원 수식과 달라진 부분은
Problem.corrections 에 기록한다 (list --format json 으로 확인 가능)
"""
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

import numpy as np

from ..config.settings import DISCRETE_STEP, SINGULARITY_EPS
from ..core.errors import UnknownIdError
from ..core.problem import Problem, SearchSpace, constraint_violation

__all__ = [
    "EngineeringProblemSpec",
    "ENGINEERING_SPECS",
    "ENGINEERING_IDS",
    "pressure_vessel",
    "spring_design",
    "three_bar_truss",
    "gear_train",
    "cantilever_beam",
    "welded_beam",
    "get_engineering_spec",
    "constraint_violation",
]


# ==================== 압력용기 ====================
# P = [S_t, H_t, I_r, L_c]

PV_MIN_VOLUME = 1_296_000.0   # in³


def _pv_cost(p: np.ndarray) -> float:
    return float(
        0.6224 * p[0] * p[2] * p[3]
        + 1.7781 * p[1] * p[2] ** 2
        + 3.1661 * p[0] ** 2 * p[3]
        + 19.84 * p[0] ** 2 * p[2]
    )


def _pv_shell(p: np.ndarray) -> float:
    return float(-p[0] + 0.0193 * p[2])


def _pv_head(p: np.ndarray) -> float:
    return float(-p[1] + 0.00954 * p[2])


def _pv_volume(p: np.ndarray) -> float:
    # 1,296,000 in³ 로 정규화 (실행 가능 영역은 동일)
    volume = np.pi * p[2] ** 2 * p[3] + (4.0 / 3.0) * np.pi * p[2] ** 3
    return float(1.0 - volume / PV_MIN_VOLUME)


def _pv_length(p: np.ndarray) -> float:
    return float(p[3] - 240.0)


def pressure_vessel() -> Problem:
    """압력용기 비용 최소화 (제약 4개, 두께는 0.0625 배수)"""
    return Problem(
        name="pressure_vessel",
        space=SearchSpace(np.array([0.0, 0.0, 10.0, 10.0]), np.array([99.0, 99.0, 200.0, 200.0])),
        objective=_pv_cost,
        constraints=(_pv_shell, _pv_head, _pv_volume, _pv_length),
        discrete_steps=((0, DISCRETE_STEP), (1, DISCRETE_STEP)),
        known_best=6059.714,
        category="engineering",
        corrections=(
            "S2: -P3 + 0.00954*P3 -> -P2 + 0.00954*P3",
            "S3 normalized: 1 - volume/1296000",
            "S4: -P4 - 240 -> P4 - 240",
        ),
    )


# ==================== 인장/압축 스프링 ====================
# P = [W_r, W_d, S_a]

def _spring_volume(p: np.ndarray) -> float:
    return float((p[2] + 2.0) * p[1] * p[0] ** 2)


def _spring_deflection(p: np.ndarray) -> float:
    return float(1.0 - p[1] ** 3 * p[2] / (71785.0 * p[0] ** 4))


def _spring_shear(p: np.ndarray) -> float:
    d, D = p[0], p[1]
    return float(
        (4.0 * D ** 2 - d * D) / (12566.0 * (D * d ** 3 - d ** 4))
        + 1.0 / (5108.0 * d ** 2)
        - 1.0
    )


def _spring_surge(p: np.ndarray) -> float:
    return float(1.0 - 140.45 * p[0] / (p[1] ** 2 * p[2]))


def _spring_diameter(p: np.ndarray) -> float:
    return float((p[0] + p[1]) / 1.5 - 1.0)


def spring_design() -> Problem:
    """스프링 부피 최소화 (제약 4개)"""
    return Problem(
        name="spring_design",
        space=SearchSpace(np.array([0.05, 0.25, 2.0]), np.array([2.0, 1.3, 15.0])),
        objective=_spring_volume,
        constraints=(_spring_deflection, _spring_shear, _spring_surge, _spring_diameter),
        known_best=0.012665,
        category="engineering",
        corrections=(
            "S1: 1 - P2^3/(71785*P1^4) -> 1 - P2^3*P3/(71785*P1^4)",
            "S4: -(P1+P2)/1.5 - 1 -> (P1+P2)/1.5 - 1",
        ),
    )


# ==================== 3-bar truss ====================
# B = [B1, B2], l = 100, P = sigma = 2

TRUSS_LENGTH = 100.0
TRUSS_LOAD = 2.0
TRUSS_STRESS = 2.0


def _truss_weight(b: np.ndarray) -> float:
    return float((2.0 * np.sqrt(2.0) * b[0] + b[1]) * TRUSS_LENGTH)


def _truss_denominator(b: np.ndarray) -> float:
    return float(np.sqrt(2.0) * b[0] ** 2 + 2.0 * b[0] * b[1])


def _truss_stress_1(b: np.ndarray) -> float:
    den = _truss_denominator(b)
    if den < SINGULARITY_EPS:
        return float("inf")
    return float((np.sqrt(2.0) * b[0] + b[1]) / den * TRUSS_LOAD - TRUSS_STRESS)


def _truss_stress_2(b: np.ndarray) -> float:
    den = _truss_denominator(b)
    if den < SINGULARITY_EPS:
        return float("inf")
    return float(b[1] / den * TRUSS_LOAD - TRUSS_STRESS)


def _truss_stress_3(b: np.ndarray) -> float:
    den = np.sqrt(2.0) * b[1] + b[0]
    if den < SINGULARITY_EPS or _truss_denominator(b) < SINGULARITY_EPS:
        return float("inf")
    return float(1.0 / den * TRUSS_LOAD - TRUSS_STRESS)


def three_bar_truss() -> Problem:
    """3-bar truss 무게 최소화 (제약 3개)"""
    return Problem(
        name="three_bar_truss",
        space=SearchSpace(np.array([0.0, 0.0]), np.array([1.0, 1.0])),
        objective=_truss_weight,
        constraints=(_truss_stress_1, _truss_stress_2, _truss_stress_3),
        known_best=263.8958,
        category="engineering",
        corrections=(
            "objective: (2*sqrt(2*B1) + B2)*l -> (2*sqrt(2)*B1 + B2)*l",
            "S1-S3: sqrt grouping read as (sqrt(2)*B1 + B2)/(sqrt(2)*B1^2 + 2*B1*B2), "
            "S3 denominator sqrt(2)*B2 + B1",
            "sqrt(2)*B1^2 + 2*B1*B2 < 1e-12 -> constraints maximally violated",
        ),
    )


# ==================== 기어열 ====================

GEAR_TARGET_RATIO = 1.0 / 6.931


def _gear_error(g: np.ndarray) -> float:
    return float((GEAR_TARGET_RATIO - (g[0] * g[1]) / (g[2] * g[3])) ** 2)


def gear_train() -> Problem:
    """기어비 오차 최소화 (무제약, 정수 4개)"""
    return Problem(
        name="gear_train",
        space=SearchSpace(np.full(4, 12.0), np.full(4, 60.0)),
        objective=_gear_error,
        integer_dims=frozenset(range(4)),
        known_best=2.70086e-12,
        category="engineering",
        corrections=(
            "objective squared: (1/6.931 - ratio)^2",
            "bounds [12, 60] integers",
        ),
    )


# ==================== 캔틸레버 보 ====================

CANTILEVER_WEIGHTS = np.array([61.0, 37.0, 19.0, 7.0, 1.0])


def _cantilever_weight(x: np.ndarray) -> float:
    return float(0.0624 * np.sum(x))


def _cantilever_deflection(x: np.ndarray) -> float:
    return float(np.sum(CANTILEVER_WEIGHTS / x ** 3) - 1.0)


def cantilever_beam() -> Problem:
    """캔틸레버 보 무게 최소화 (제약 1개)"""
    return Problem(
        name="cantilever_beam",
        space=SearchSpace.uniform(5, 0.01, 100.0),
        objective=_cantilever_weight,
        constraints=(_cantilever_deflection,),
        known_best=1.339956,
        category="engineering",
    )


# ==================== 용접 보 ====================
# P = [W_t, W_l, B_h, B_t] = [h, l, t, b]

WELD_LOAD = 6000.0          # lb
WELD_LENGTH = 14.0          # in
WELD_E = 30e6               # psi
WELD_G = 12e6               # psi
WELD_TAU_MAX = 13600.0      # psi
WELD_SIGMA_MAX = 30000.0    # psi
WELD_DELTA_MAX = 0.25       # in


def _weld_cost(p: np.ndarray) -> float:
    return float(1.10471 * p[0] ** 2 * p[1] + 0.04811 * p[2] * p[3] * (14.0 + p[1]))


def weld_shear_stress(p: np.ndarray) -> float:
    """용접부 전단 응력 τ"""
    h, l, t = p[0], p[1], p[2]
    tau_prime = WELD_LOAD / (np.sqrt(2.0) * h * l)
    moment = WELD_LOAD * (WELD_LENGTH + l / 2.0)
    radius = np.sqrt(l ** 2 / 4.0 + ((h + t) / 2.0) ** 2)
    polar = 2.0 * (np.sqrt(2.0) * h * l * (l ** 2 / 12.0 + ((h + t) / 2.0) ** 2))
    tau_double = moment * radius / polar
    return float(np.sqrt(tau_prime ** 2 + 2.0 * tau_prime * tau_double * l / (2.0 * radius) + tau_double ** 2))


def weld_bending_stress(p: np.ndarray) -> float:
    """보 굽힘 응력 σ"""
    return float(6.0 * WELD_LOAD * WELD_LENGTH / (p[3] * p[2] ** 2))


def weld_deflection(p: np.ndarray) -> float:
    """끝단 처짐 δ"""
    return float(4.0 * WELD_LOAD * WELD_LENGTH ** 3 / (WELD_E * p[2] ** 3 * p[3]))


def weld_buckling_load(p: np.ndarray) -> float:
    """좌굴 하중 P_c"""
    t, b = p[2], p[3]
    return float(
        4.013 * WELD_E * np.sqrt(t ** 2 * b ** 6 / 36.0) / WELD_LENGTH ** 2
        * (1.0 - t / (2.0 * WELD_LENGTH) * np.sqrt(WELD_E / (4.0 * WELD_G)))
    )


def _weld_shear(p: np.ndarray) -> float:
    return weld_shear_stress(p) / WELD_TAU_MAX - 1.0


def _weld_bending(p: np.ndarray) -> float:
    return weld_bending_stress(p) / WELD_SIGMA_MAX - 1.0


def _weld_deflection(p: np.ndarray) -> float:
    return weld_deflection(p) / WELD_DELTA_MAX - 1.0


def _weld_thickness_order(p: np.ndarray) -> float:
    return float(p[0] - p[3])


def _weld_buckling(p: np.ndarray) -> float:
    return 1.0 - weld_buckling_load(p) / WELD_LOAD


def _weld_min_thickness(p: np.ndarray) -> float:
    return float(0.125 - p[0])


def _weld_cost_limit(p: np.ndarray) -> float:
    return float(0.10471 * p[0] ** 2 + 0.04811 * p[2] * p[3] * (14.0 + p[1]) - 5.0)


def welded_beam() -> Problem:
    """용접 보 제작 비용 최소화 (제약 7개)"""
    return Problem(
        name="welded_beam",
        space=SearchSpace(np.array([0.1, 0.1, 0.1, 0.1]), np.array([2.0, 10.0, 10.0, 2.0])),
        objective=_weld_cost,
        constraints=(
            _weld_shear,
            _weld_bending,
            _weld_deflection,
            _weld_thickness_order,
            _weld_buckling,
            _weld_min_thickness,
            _weld_cost_limit,
        ),
        known_best=1.724852,
        category="engineering",
        corrections=(
            "tau, sigma, delta, P_c from the standard formulation "
            "(P=6000, L=14, E=30e6, G=12e6, tau_max=13600, sigma_max=30000, delta_max=0.25)",
            "S1, S2, S3, S5 normalized by their limits",
            "S7: 1.10471*P*W_t^2 -> 0.10471*W_t^2",
            "bounds: 0.1 <= W_t, B_t <= 2, 0.1 <= W_l, B_h <= 10",
        ),
    )


# ==================== 명세 표 ====================

@dataclass(frozen=True)
class EngineeringProblemSpec:
    """공학 설계 문제 정의"""
    id: str
    display_name: str
    builder: Callable[[], Problem]
    constraint_count: int
    known_best: float
    literature_optimum: Tuple[float, ...] = field(default_factory=tuple)


ENGINEERING_SPECS: Dict[str, EngineeringProblemSpec] = {
    spec.id: spec for spec in [
        EngineeringProblemSpec("pressure_vessel", "Pressure Vessel Design", pressure_vessel, 4, 6059.714,
                               (0.8125, 0.4375, 42.0984, 176.6366)),
        EngineeringProblemSpec("spring_design", "Spring Design", spring_design, 4, 0.012665,
                               (0.0517, 0.3567, 11.289)),
        EngineeringProblemSpec("three_bar_truss", "Three Bar Truss", three_bar_truss, 3, 263.8958,
                               (0.78868, 0.40825)),
        EngineeringProblemSpec("gear_train", "Gear Train Design", gear_train, 0, 2.70086e-12,
                               (19.0, 16.0, 43.0, 49.0)),
        EngineeringProblemSpec("cantilever_beam", "Cantilever Beam", cantilever_beam, 1, 1.339956,
                               (6.016, 5.309, 4.494, 3.502, 2.153)),
        EngineeringProblemSpec("welded_beam", "Welded Beam", welded_beam, 7, 1.724852,
                               (0.2057, 3.4705, 9.0366, 0.2057)),
    ]
}

ENGINEERING_IDS = list(ENGINEERING_SPECS.keys())


def get_engineering_spec(problem_id: str) -> EngineeringProblemSpec:
    key = problem_id.lower()
    if key not in ENGINEERING_SPECS:
        raise UnknownIdError(f"알 수 없는 공학 설계 문제: {problem_id}")
    return ENGINEERING_SPECS[key]
