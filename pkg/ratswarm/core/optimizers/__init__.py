"""
RatSwarm - 최적화 엔진
RSO / MRSO 계수 스케줄과 탐색 루프
"""
from .coefficients import (
    IterationCoefficients,
    draw_coefficients_mrso,
    draw_coefficients_rso,
    mrso_coefficients,
    rso_coefficients,
)
from .rat_swarm import (
    Algorithm,
    RunConfig,
    SwarmState,
    RunRecord,
    RatSwarmOptimizer,
    chase,
    fight,
    initialize_swarm,
    step,
    run,
)

__all__ = [
    "IterationCoefficients",
    "draw_coefficients_mrso",
    "draw_coefficients_rso",
    "mrso_coefficients",
    "rso_coefficients",
    "Algorithm",
    "RunConfig",
    "SwarmState",
    "RunRecord",
    "RatSwarmOptimizer",
    "chase",
    "fight",
    "initialize_swarm",
    "step",
    "run",
]
