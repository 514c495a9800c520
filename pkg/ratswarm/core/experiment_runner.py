"""
RatSwarm - 실험 실행기
(알고리즘, 문제) 별로 시드 고정 실행 묶음을 돌리고 ResultFile 로 모은다
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..problems.registry import get_problem, resolve_problem_id, stream_offset
from ..results.models import ExperimentManifest, ResultEntry, ResultFile
from .optimizers.rat_swarm import Algorithm, RunConfig, RunRecord, run
from .problem import constraint_violation
from .stats import summarize

logger = logging.getLogger(__name__)

Task = Tuple[str, RunConfig]


def _execute(task: Task) -> RunRecord:
    """워커 프로세스 진입점: Problem 은 ID 로 다시 만든다 (함수 객체는 피클 불가)"""
    problem_id, config = task
    return run(get_problem(problem_id), config)


class ExperimentRunner:
    """시드 고정 실행 묶음 실행기"""

    def __init__(self, jobs: int = 1, progress: Optional[Callable[[str, str, int], None]] = None):
        """
        Args:
            jobs: 동시 실행 프로세스 수 (1 이면 현재 프로세스에서 순차 실행)
            progress: (algorithm, problem, 완료 실행 수) 콜백 (선택)
        """
        if jobs < 1:
            raise ValueError(f"jobs는 1 이상이어야 합니다: {jobs}")
        self.jobs = jobs
        self.progress = progress

    def build_tasks(self, manifest: ExperimentManifest) -> List[Task]:
        """manifest → (problem_id, RunConfig) 목록, 알고리즘·문제·실행 순서"""
        tasks = []
        for algo_name in manifest.algorithms:
            algorithm = Algorithm.parse(algo_name)
            for problem_name in manifest.problems:
                problem_id = resolve_problem_id(problem_name)
                offset = stream_offset(algorithm.value, problem_id)
                for run_index in range(manifest.runs):
                    tasks.append((problem_id, RunConfig(
                        algorithm=algorithm,
                        population=manifest.population,
                        max_iterations=manifest.iterations,
                        seed=manifest.seed_for(run_index),
                        stream_offset=offset,
                        run_index=run_index,
                    )))
        return tasks

    def _execute_all(self, tasks: List[Task]) -> List[RunRecord]:
        if self.jobs == 1:
            return [_execute(task) for task in tasks]

        # map 은 제출 순서대로 돌려준다
        chunksize = max(1, len(tasks) // (self.jobs * 4))
        with ProcessPoolExecutor(max_workers=self.jobs) as executor:
            return list(executor.map(_execute, tasks, chunksize=chunksize))

    def run(self, manifest: ExperimentManifest) -> ResultFile:
        """
        manifest 의 모든 (알고리즘, 문제) 쌍 실행

        Returns:
            ResultFile (항목 순서 = manifest 순서, 실행 순서 = run_index)
        """
        tasks = self.build_tasks(manifest)
        logger.info(
            "실험 시작: %d algorithms x %d problems x %d runs (jobs=%d)",
            len(manifest.algorithms), len(manifest.problems), manifest.runs, self.jobs,
        )

        records = self._execute_all(tasks)

        grouped: Dict[Tuple[str, str], List[RunRecord]] = {}
        for (problem_id, config), record in zip(tasks, records):
            grouped.setdefault((config.algorithm.value, problem_id), []).append(record)

        result_file = ResultFile(manifest=manifest)
        for (algo, problem_id), group in grouped.items():
            entry = build_entry(algo, problem_id, group)
            result_file.add(entry)
            logger.info("완료: %s / %s mean=%.3E", algo, problem_id, entry.summary.mean)
            if self.progress is not None:
                self.progress(algo, problem_id, len(group))

        return result_file


def build_entry(algorithm: str, problem_id: str, records: List[RunRecord]) -> ResultEntry:
    """실행 기록 묶음 → ResultEntry (최고 실행 동점은 낮은 run_index 우선)"""
    records = sorted(records, key=lambda r: r.run_index)
    finals = [r.final_fitness for r in records]
    best = records[int(np.argmin(finals))]

    problem = get_problem(problem_id)
    return ResultEntry(
        algorithm=algorithm,
        problem=problem_id,
        summary=summarize(finals),
        final_fitnesses=finals,
        best_position=list(best.final_position),
        best_violation=constraint_violation(problem, np.asarray(best.final_position)),
        evaluations=sum(r.evaluations for r in records),
        histories=[list(r.history) for r in records],
    )
