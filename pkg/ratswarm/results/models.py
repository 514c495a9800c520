"""
RatSwarm - 결과 데이터 모델
실험 설정, (알고리즘, 문제) 별 결과, 결과 파일 문서
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..config.settings import (
    DEFAULT_BASE_SEED,
    DEFAULT_ITERATIONS,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_POPULATION,
    DEFAULT_RUNS,
    RESULT_SCHEMA_VERSION,
)
from ..core.errors import ResultFileError
from ..core.stats import SummaryStats


@dataclass
class ExperimentManifest:
    """실험 설정 (CLI 플래그 묶음)"""

    problems: List[str] = field(default_factory=list)
    algorithms: List[str] = field(default_factory=lambda: ["mrso"])
    population: int = DEFAULT_POPULATION      # N
    iterations: int = DEFAULT_ITERATIONS      # T
    runs: int = DEFAULT_RUNS
    base_seed: int = DEFAULT_BASE_SEED        # 실행 i 의 시드 = base_seed + i

    # 문서에는 넣지 않음 (같은 플래그 → 같은 바이트)
    output_dir: Path = DEFAULT_OUTPUT_DIR

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError(f"실행 횟수는 1 이상이어야 합니다: {self.runs}")
        if self.base_seed < 0:
            raise ValueError(f"시드는 0 이상이어야 합니다: {self.base_seed}")

    def seed_for(self, run_index: int) -> int:
        return self.base_seed + run_index

    def to_dict(self) -> dict:
        """딕셔너리로 변환"""
        return {
            "problems": list(self.problems),
            "algorithms": list(self.algorithms),
            "population": self.population,
            "iterations": self.iterations,
            "runs": self.runs,
            "base_seed": self.base_seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentManifest":
        """딕셔너리에서 생성"""
        return cls(
            problems=[str(p) for p in data["problems"]],
            algorithms=[str(a) for a in data["algorithms"]],
            population=int(data["population"]),
            iterations=int(data["iterations"]),
            runs=int(data["runs"]),
            base_seed=int(data["base_seed"]),
        )


@dataclass
class ResultEntry:
    """(알고리즘, 문제) 한 쌍의 결과"""

    algorithm: str
    problem: str
    summary: SummaryStats
    final_fitnesses: List[float] = field(default_factory=list)   # 실행 순서
    best_position: List[float] = field(default_factory=list)     # 최고 실행의 gbest (반올림 후)
    best_violation: float = 0.0                                   # 0 이면 실행 가능
    evaluations: int = 0                                          # 전체 실행 합계 N·(T+1)·runs

    # 수렴 곡선은 CSV 로만 저장
    histories: List[List[float]] = field(default_factory=list, repr=False)

    @property
    def key(self) -> Tuple[str, str]:
        return (self.algorithm, self.problem)

    def to_dict(self) -> dict:
        """딕셔너리로 변환"""
        return {
            "summary": self.summary.to_dict(),
            "final_fitnesses": list(self.final_fitnesses),
            "best_position": list(self.best_position),
            "best_violation": self.best_violation,
            "evaluations": self.evaluations,
        }

    @classmethod
    def from_dict(cls, algorithm: str, problem: str, data: dict) -> "ResultEntry":
        """딕셔너리에서 생성"""
        return cls(
            algorithm=algorithm,
            problem=problem,
            summary=SummaryStats.from_dict(data["summary"]),
            final_fitnesses=[float(v) for v in data["final_fitnesses"]],
            best_position=[float(v) for v in data["best_position"]],
            best_violation=float(data.get("best_violation", 0.0)),
            evaluations=int(data.get("evaluations", 0)),
        )


@dataclass
class ResultFile:
    """결과 파일 문서: 설정 + (알고리즘, 문제) 별 결과"""

    manifest: ExperimentManifest
    entries: Dict[Tuple[str, str], ResultEntry] = field(default_factory=dict)
    schema_version: int = RESULT_SCHEMA_VERSION

    def add(self, entry: ResultEntry) -> None:
        self.entries[entry.key] = entry

    def get(self, algorithm: str, problem: str) -> Optional[ResultEntry]:
        return self.entries.get((algorithm, problem))

    def algorithms(self) -> List[str]:
        """등장 순서대로, 중복 없이"""
        return list(dict.fromkeys(algo for algo, _ in self.entries))

    def problems(self, algorithm: Optional[str] = None) -> List[str]:
        return list(dict.fromkeys(
            problem for algo, problem in self.entries
            if algorithm is None or algo == algorithm
        ))

    def to_dict(self) -> dict:
        """{algorithm: {problem: entry}} 형태로 변환"""
        results: Dict[str, Dict[str, dict]] = {}
        for (algo, problem), entry in self.entries.items():
            results.setdefault(algo, {})[problem] = entry.to_dict()
        return {
            "schema_version": self.schema_version,
            "manifest": self.manifest.to_dict(),
            "results": results,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ResultFile":
        """
        딕셔너리에서 생성

        Raises:
            ResultFileError: 필수 키 누락, 타입 오류, 지원하지 않는 schema_version
        """
        if not isinstance(data, dict):
            raise ResultFileError("결과 파일 최상위는 객체여야 합니다")

        version = data.get("schema_version")
        if version != RESULT_SCHEMA_VERSION:
            raise ResultFileError(f"지원하지 않는 schema_version: {version}")

        try:
            manifest = ExperimentManifest.from_dict(data["manifest"])
            result_file = cls(manifest=manifest, schema_version=version)
            for algo, per_problem in data["results"].items():
                for problem, entry in per_problem.items():
                    result_file.add(ResultEntry.from_dict(algo, problem, entry))
        except (KeyError, TypeError, ValueError, AttributeError) as e:
            raise ResultFileError(f"결과 파일 형식 오류: {e!r}") from e

        return result_file
