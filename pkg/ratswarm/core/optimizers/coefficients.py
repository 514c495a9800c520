"""
RatSwarm - 반복별 계수 스케줄

RSO:  A = R - t·(R/T)
MRSO: F1 = R - (t-1)·(R/T), F2 = 1 - t/T, F3 = 2·u1 - u2, A = F1·F2·F3
공통: R ~ U[1,5), C ~ U[0,2), 반복마다 한 번 뽑아 모든 개체가 공유
"""
from dataclasses import dataclass
from typing import Optional

from ...config.settings import C_RANGE, R_RANGE
from ..rng import RngStream


@dataclass(frozen=True)
class IterationCoefficients:
    """한 반복의 추격 계수"""
    R: float
    C: float
    A: float                      # RSO의 A 또는 MRSO의 A_modified
    f1: Optional[float] = None    # MRSO 전용
    f2: Optional[float] = None
    f3: Optional[float] = None

    def to_dict(self) -> dict:
        return {"R": self.R, "C": self.C, "A": self.A, "f1": self.f1, "f2": self.f2, "f3": self.f3}


def _check_iteration(t: int, T: int):
    if T < 1 or not 1 <= t <= T:
        raise ValueError(f"반복 인덱스는 1 <= t <= T 이어야 합니다: t={t}, T={T}")


def rso_coefficients(R: float, C: float, t: int, T: int) -> IterationCoefficients:
    """주어진 R, C로 RSO 계수 계산"""
    _check_iteration(t, T)
    # R·(1 - t/T) 형태: t = T 에서 정확히 0
    return IterationCoefficients(R=R, C=C, A=R * (1.0 - t / T))


def mrso_coefficients(R: float, u1: float, u2: float, C: float, t: int, T: int) -> IterationCoefficients:
    """주어진 R, u1, u2, C로 MRSO 계수 계산"""
    _check_iteration(t, T)
    f1 = R * (1.0 - (t - 1) / T)
    f2 = 1.0 - t / T
    f3 = 2.0 * u1 - 1.0 * u2
    return IterationCoefficients(R=R, C=C, A=f1 * f2 * f3, f1=f1, f2=f2, f3=f3)


def draw_coefficients_rso(rng: RngStream, t: int, T: int) -> IterationCoefficients:
    """난수 순서: R, C"""
    _check_iteration(t, T)
    R = rng.uniform(*R_RANGE)
    C = rng.uniform(*C_RANGE)
    return rso_coefficients(R, C, t, T)


def draw_coefficients_mrso(rng: RngStream, t: int, T: int) -> IterationCoefficients:
    """난수 순서: R, u1, u2, C (재현성을 위해 고정)"""
    _check_iteration(t, T)
    R = rng.uniform(*R_RANGE)
    u1 = rng.uniform(0.0, 1.0)
    u2 = rng.uniform(0.0, 1.0)
    C = rng.uniform(*C_RANGE)
    return mrso_coefficients(R, u1, u2, C, t, T)
