"""
RatSwarm - 결과 파일 비교
공통 문제별 Wilcoxon 순위합 p-value + Friedman 평균 순위
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ..core.errors import RatSwarmError, UnknownIdError
from ..core.stats import ComparisonResult, RankTable, friedman_mean_ranks, wilcoxon_rank_sum
from .models import ResultFile

logger = logging.getLogger(__name__)

ZERO_MEAN_TOLERANCE = 1e-12


class NoSharedProblemsError(RatSwarmError, ValueError):
    """두 결과 파일에 공통 문제가 없음"""


@dataclass(frozen=True)
class ProblemComparison:
    """문제 하나의 비교 행"""
    problem: str
    mean_a: float
    std_a: float
    mean_b: float
    std_b: float
    result: ComparisonResult

    @property
    def tied(self) -> bool:
        """표에 '=' 로 표시할지 (모두 같거나, 두 평균 모두 0)"""
        both_zero = abs(self.mean_a) < ZERO_MEAN_TOLERANCE and abs(self.mean_b) < ZERO_MEAN_TOLERANCE
        return self.result.tied or both_zero

    @property
    def winner(self) -> Optional[str]:
        """유의한 차이가 있을 때 평균이 낮은 쪽 ("a" | "b")"""
        if self.tied or not self.result.significant:
            return None
        return "a" if self.mean_a < self.mean_b else "b"

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "mean_a": self.mean_a,
            "std_a": self.std_a,
            "mean_b": self.mean_b,
            "std_b": self.std_b,
            **self.result.to_dict(),
            "tied": self.tied,
        }


@dataclass(frozen=True)
class ComparisonReport:
    """두 알고리즘 결과 비교"""
    label_a: str
    label_b: str
    rows: List[ProblemComparison] = field(default_factory=list)
    ranks: Optional[RankTable] = None

    def wins(self) -> dict:
        """유의한 승리 횟수"""
        a = sum(1 for row in self.rows if row.winner == "a")
        b = sum(1 for row in self.rows if row.winner == "b")
        return {self.label_a: a, self.label_b: b}

    def to_dict(self) -> dict:
        return {
            "label_a": self.label_a,
            "label_b": self.label_b,
            "rows": [row.to_dict() for row in self.rows],
            "friedman": self.ranks.to_dict() if self.ranks else None,
        }


def _pick_algorithm(result_file: ResultFile, requested: Optional[str], which: str) -> str:
    available = result_file.algorithms()
    if not available:
        raise NoSharedProblemsError(f"{which}: 결과 항목이 없습니다")
    if requested is None:
        return available[0]
    if requested.lower() not in available:
        raise UnknownIdError(f"{which}: 알고리즘 {requested} 결과가 없습니다 (있음: {available})")
    return requested.lower()


def compare_result_files(
    file_a: ResultFile,
    file_b: ResultFile,
    algo_a: Optional[str] = None,
    algo_b: Optional[str] = None,
) -> ComparisonReport:
    """
    두 결과 파일의 공통 문제 비교

    Args:
        file_a: 첫 번째 결과 파일
        file_b: 두 번째 결과 파일
        algo_a: file_a 에서 고를 알고리즘 (없으면 첫 번째)
        algo_b: file_b 에서 고를 알고리즘 (없으면 첫 번째)

    Returns:
        ComparisonReport (행 순서 = file_a 의 문제 순서)

    Raises:
        NoSharedProblemsError: 공통 문제 없음
    """
    name_a = _pick_algorithm(file_a, algo_a, "A")
    name_b = _pick_algorithm(file_b, algo_b, "B")

    # 같은 알고리즘끼리 비교할 때도 순위표 이름은 구분
    label_a, label_b = (name_a, name_b) if name_a != name_b else (f"A:{name_a}", f"B:{name_b}")

    shared_b = set(file_b.problems(name_b))
    shared = [p for p in file_a.problems(name_a) if p in shared_b]
    if not shared:
        raise NoSharedProblemsError(f"공통 문제가 없습니다: {name_a} vs {name_b}")

    logger.info("비교: %s vs %s, 공통 문제 %d개", label_a, label_b, len(shared))

    rows = []
    for problem in shared:
        entry_a = file_a.get(name_a, problem)
        entry_b = file_b.get(name_b, problem)
        rows.append(ProblemComparison(
            problem=problem,
            mean_a=entry_a.summary.mean,
            std_a=entry_a.summary.std,
            mean_b=entry_b.summary.mean,
            std_b=entry_b.summary.std,
            result=wilcoxon_rank_sum(entry_a.final_fitnesses, entry_b.final_fitnesses),
        ))

    ranks = friedman_mean_ranks(
        [[row.mean_a for row in rows], [row.mean_b for row in rows]],
        algorithms=[label_a, label_b],
    )
    return ComparisonReport(label_a=label_a, label_b=label_b, rows=rows, ranks=ranks)
