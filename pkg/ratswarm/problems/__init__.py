"""
RatSwarm - 문제 모음
고전 벤치마크 F1-F23, 제약 공학 설계 6종, ID 레지스트리
"""
from .benchmarks import (
    BENCHMARKS,
    CLASSICAL_IDS,
    BenchmarkSpec,
    evaluate_classical,
    get_benchmark_spec,
    make_classical_suite,
)
from .engineering import (
    ENGINEERING_IDS,
    ENGINEERING_SPECS,
    EngineeringProblemSpec,
    cantilever_beam,
    constraint_violation,
    gear_train,
    pressure_vessel,
    spring_design,
    three_bar_truss,
    welded_beam,
)
from .registry import (
    PROBLEM_REGISTRY,
    get_problem,
    is_engineering,
    list_problem_ids,
    resolve_problem_id,
    stream_offset,
)

__all__ = [
    "BENCHMARKS",
    "CLASSICAL_IDS",
    "BenchmarkSpec",
    "evaluate_classical",
    "get_benchmark_spec",
    "make_classical_suite",
    "ENGINEERING_IDS",
    "ENGINEERING_SPECS",
    "EngineeringProblemSpec",
    "cantilever_beam",
    "constraint_violation",
    "gear_train",
    "pressure_vessel",
    "spring_design",
    "three_bar_truss",
    "welded_beam",
    "PROBLEM_REGISTRY",
    "get_problem",
    "is_engineering",
    "list_problem_ids",
    "resolve_problem_id",
    "stream_offset",
]
