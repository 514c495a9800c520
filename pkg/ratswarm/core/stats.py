"""
RatSwarm - 실행 결과 통계
평균/표준편차 요약, Wilcoxon 순위합 검정, Friedman 평균 순위
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd
from scipy import stats as sps

from ..config.settings import EXACT_TEST_MAX_SIZE, SIGNIFICANCE_LEVEL, TIE_TOLERANCE
from .errors import DimensionError, EmptyInputError


@dataclass(frozen=True)
class SummaryStats:
    """최종 적합도 묶음 요약"""
    n_runs: int
    mean: float
    std: float
    best: float
    worst: float
    median: float
    q1: float
    q3: float

    def to_dict(self) -> dict:
        return {
            "n_runs": self.n_runs,
            "mean": self.mean,
            "std": self.std,
            "best": self.best,
            "worst": self.worst,
            "median": self.median,
            "q1": self.q1,
            "q3": self.q3,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SummaryStats":
        return cls(
            n_runs=int(data["n_runs"]),
            mean=float(data["mean"]),
            std=float(data["std"]),
            best=float(data["best"]),
            worst=float(data["worst"]),
            median=float(data["median"]),
            q1=float(data["q1"]),
            q3=float(data["q3"]),
        )


@dataclass(frozen=True)
class ComparisonResult:
    """두 표본 비교 결과"""
    p_value: float
    significant: bool
    tied: bool = False      # 모든 값이 같음 → 표에 '=' 표시

    def to_dict(self) -> dict:
        return {"p_value": self.p_value, "significant": self.significant, "tied": self.tied}


@dataclass(frozen=True)
class RankTable:
    """알고리즘별 Friedman 평균 순위 (낮을수록 좋음)"""
    algorithms: List[str]
    mean_ranks: List[float]
    per_problem: List[List[float]] = field(default_factory=list)  # 문제별 순위 (k × m)

    def rank_of(self, algorithm: str) -> float:
        return self.mean_ranks[self.algorithms.index(algorithm)]

    def to_dict(self) -> dict:
        return {
            "algorithms": list(self.algorithms),
            "mean_ranks": list(self.mean_ranks),
        }


def _as_sample(values: Sequence[float], name: str) -> np.ndarray:
    sample = np.asarray(values, dtype=float).ravel()
    if sample.size == 0:
        raise EmptyInputError(f"{name}: 빈 표본")
    # NaN 은 최악 값으로 취급
    return np.where(np.isnan(sample), np.inf, sample)


def summarize(final_fitnesses: Sequence[float]) -> SummaryStats:
    """
    최종 적합도 요약

    Args:
        final_fitnesses: 실행별 최종 적합도

    Returns:
        SummaryStats (표본 표준편차, n=1 이면 0)
    """
    values = _as_sample(final_fitnesses, "final_fitnesses")
    n = values.size

    best = float(np.min(values))
    worst = float(np.max(values))
    mean = float(np.mean(values))
    # 부동소수 누적 오차로 경계를 넘지 않도록
    mean = min(max(mean, best), worst)
    std = float(np.std(values, ddof=1)) if n > 1 else 0.0
    q1, median, q3 = (float(v) for v in np.percentile(values, [25, 50, 75]))

    return SummaryStats(
        n_runs=n,
        mean=mean,
        std=std,
        best=best,
        worst=worst,
        median=median,
        q1=q1,
        q3=q3,
    )


def _all_tied(a: np.ndarray, b: np.ndarray) -> bool:
    pooled = np.concatenate([a, b])
    if not np.all(np.isfinite(pooled)):
        return bool(np.all(pooled == pooled[0]))
    return bool(np.max(pooled) - np.min(pooled) <= TIE_TOLERANCE)


def wilcoxon_rank_sum(a: Sequence[float], b: Sequence[float]) -> ComparisonResult:
    """
    양측 Wilcoxon 순위합 검정 (Mann-Whitney U)

    두 표본 모두 EXACT_TEST_MAX_SIZE 이하이고 동점이 없으면 정확 분포,
    그 외에는 동점 보정 분산 + 연속성 보정 정규 근사.

    Args:
        a: 알고리즘 A 최종 적합도
        b: 알고리즘 B 최종 적합도

    Returns:
        ComparisonResult
    """
    x = _as_sample(a, "a")
    y = _as_sample(b, "b")

    if _all_tied(x, y):
        return ComparisonResult(p_value=1.0, significant=False, tied=True)

    pooled = np.concatenate([x, y])
    has_ties = np.unique(pooled).size < pooled.size
    small = x.size <= EXACT_TEST_MAX_SIZE and y.size <= EXACT_TEST_MAX_SIZE

    if small and not has_ties:
        result = sps.mannwhitneyu(x, y, alternative="two-sided", method="exact")
    else:
        result = sps.mannwhitneyu(
            x, y, alternative="two-sided", method="asymptotic", use_continuity=True
        )

    p_value = float(np.clip(result.pvalue, 0.0, 1.0))
    return ComparisonResult(p_value=p_value, significant=p_value < SIGNIFICANCE_LEVEL)


def friedman_mean_ranks(
    results: Sequence[Sequence[float]],
    algorithms: Optional[Sequence[str]] = None,
) -> RankTable:
    """
    Friedman 평균 순위

    Args:
        results: k(알고리즘) × m(문제) 행렬, 값이 낮을수록 좋음
        algorithms: 알고리즘 이름 (없으면 A1..Ak)

    Returns:
        RankTable (동점은 평균 순위)
    """
    try:
        matrix = np.asarray(results, dtype=float)
    except ValueError as e:
        raise DimensionError(f"결과 행렬 형태가 올바르지 않습니다: {e}") from e

    if matrix.ndim != 2:
        raise DimensionError(f"결과 행렬은 2차원이어야 합니다: ndim={matrix.ndim}")
    k, m = matrix.shape
    if k < 2:
        raise DimensionError(f"알고리즘은 2개 이상이어야 합니다: {k}")
    if m < 1:
        raise DimensionError("문제가 1개 이상이어야 합니다")

    names = list(algorithms) if algorithms is not None else [f"A{i + 1}" for i in range(k)]
    if len(names) != k:
        raise DimensionError(f"알고리즘 이름 수 {len(names)} != 행 수 {k}")

    frame = pd.DataFrame(np.where(np.isnan(matrix), np.inf, matrix), index=names)
    ranks = frame.rank(axis=0, method="average", ascending=True)

    return RankTable(
        algorithms=names,
        mean_ranks=[float(v) for v in ranks.mean(axis=1)],
        per_problem=ranks.values.tolist(),
    )
