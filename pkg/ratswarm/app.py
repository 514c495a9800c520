"""
RatSwarm - 명령행 실험 실행기

    python -m ratswarm list
    python -m ratswarm run --algo mrso --problem F1 --seed 42
    python -m ratswarm suite --jobs 4
    python -m ratswarm compare results/mrso_F1.json results/rso_F1.json
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .config.settings import (
    ALGORITHMS,
    DEFAULT_BASE_SEED,
    DEFAULT_ITERATIONS,
    DEFAULT_JOBS,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_POPULATION,
    DEFAULT_RUNS,
    EXIT_BAD_ARGUMENTS,
    EXIT_IO_FAILURE,
    EXIT_MALFORMED_INPUT,
    EXIT_OK,
    LOG_LEVEL,
    OUTPUT_FORMATS,
    configure_logging,
)
from .core.errors import ResultFileError, UnknownIdError
from .core.experiment_runner import ExperimentRunner
from .core.optimizers.rat_swarm import MAX_SEED
from .problems.registry import list_problem_ids, resolve_problem_id
from .results.comparison import compare_result_files
from .results.models import ExperimentManifest
from .results.result_store import ResultStore
from .ui.components import render_comparison_report, render_problem_list, render_summary_table

logger = logging.getLogger("ratswarm")


def _add_experiment_options(parser: argparse.ArgumentParser):
    """run / suite 공통 옵션"""
    parser.add_argument("--pop", type=int, default=DEFAULT_POPULATION,
                        help=f"개체 수 N (기본 {DEFAULT_POPULATION})")
    parser.add_argument("--iters", type=int, default=DEFAULT_ITERATIONS,
                        help=f"반복 수 T (기본 {DEFAULT_ITERATIONS})")
    parser.add_argument("--runs", type=int, default=DEFAULT_RUNS,
                        help=f"독립 실행 횟수 (기본 {DEFAULT_RUNS})")
    parser.add_argument("--seed", type=int, default=DEFAULT_BASE_SEED,
                        help="기준 시드, 실행 i 는 seed + i 사용")
    parser.add_argument("--out", type=Path, default=DEFAULT_OUTPUT_DIR,
                        help="결과 디렉터리")
    parser.add_argument("--jobs", type=int, default=DEFAULT_JOBS,
                        help="동시 실행 프로세스 수 (결과 바이트는 동일)")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="md",
                        help="표준 출력 요약 형식")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratswarm",
        description="RSO / MRSO 벤치마크 실험 실행기",
    )
    parser.add_argument("--log-level", default=LOG_LEVEL,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        type=str.upper, help="로그 레벨 (stderr)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="등록된 문제 목록")
    p_list.add_argument("--format", choices=OUTPUT_FORMATS, default="md")

    p_run = sub.add_parser("run", help="한 (알고리즘, 문제) 쌍 실행")
    p_run.add_argument("--algo", choices=list(ALGORITHMS), default="mrso", type=str.lower)
    p_run.add_argument("--problem", required=True, help="문제 ID (list 참고)")
    _add_experiment_options(p_run)

    p_suite = sub.add_parser("suite", help="전체 문제 x {mrso, rso} 실행")
    p_suite.add_argument("--problem", action="append", default=None,
                         help="일부 문제만 실행 (반복 지정 가능)")
    _add_experiment_options(p_suite)

    p_compare = sub.add_parser("compare", help="두 결과 파일 통계 비교")
    p_compare.add_argument("file_a", type=Path)
    p_compare.add_argument("file_b", type=Path)
    p_compare.add_argument("--algo-a", default=None, help="file_a 에서 사용할 알고리즘")
    p_compare.add_argument("--algo-b", default=None, help="file_b 에서 사용할 알고리즘")
    p_compare.add_argument("--format", choices=OUTPUT_FORMATS, default="md")

    return parser


def _manifest_from_args(args, problems: List[str], algorithms: List[str]) -> ExperimentManifest:
    if args.jobs < 1:
        raise ValueError(f"--jobs 는 1 이상이어야 합니다: {args.jobs}")
    if args.seed < 0 or args.seed + args.runs - 1 >= MAX_SEED:
        raise ValueError(f"--seed 는 부호 없는 64비트 범위여야 합니다: {args.seed}")
    return ExperimentManifest(
        problems=[resolve_problem_id(p) for p in problems],
        algorithms=algorithms,
        population=args.pop,
        iterations=args.iters,
        runs=args.runs,
        base_seed=args.seed,
        output_dir=args.out,
    )


def cmd_list(args) -> int:
    sys.stdout.write(render_problem_list(args.format))
    return EXIT_OK


def cmd_run(args) -> int:
    manifest = _manifest_from_args(args, [args.problem], [args.algo])
    store = ResultStore(manifest.output_dir)
    store.ensure_dir()

    result_file = ExperimentRunner(jobs=args.jobs).run(manifest)
    path = store.save(result_file, f"{args.algo}_{manifest.problems[0]}")
    logger.info("run 완료: %s", path)

    sys.stdout.write(render_summary_table(result_file, args.format))
    return EXIT_OK


def cmd_suite(args) -> int:
    problems = args.problem or list_problem_ids()
    manifest = _manifest_from_args(args, problems, ["mrso", "rso"])
    store = ResultStore(manifest.output_dir)
    store.ensure_dir()

    result_file = ExperimentRunner(jobs=args.jobs).run(manifest)
    path = store.save(result_file, "suite")
    store.save_text("suite_table.md", render_summary_table(result_file, "md"))
    store.save_text("suite_table.csv", render_summary_table(result_file, "csv"))
    logger.info("suite 완료: %s", path)

    sys.stdout.write(render_summary_table(result_file, args.format))
    return EXIT_OK


def cmd_compare(args) -> int:
    file_a = ResultStore.load(args.file_a)
    file_b = ResultStore.load(args.file_b)
    report = compare_result_files(file_a, file_b, args.algo_a, args.algo_b)
    sys.stdout.write(render_comparison_report(report, args.format))
    return EXIT_OK


COMMANDS = {
    "list": cmd_list,
    "run": cmd_run,
    "suite": cmd_suite,
    "compare": cmd_compare,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    명령 실행 후 종료 코드 반환

    0 성공, 2 잘못된 인자/알 수 없는 ID, 3 입출력 실패, 4 잘못된 입력 파일
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_BAD_ARGUMENTS

    configure_logging(args.log_level)

    try:
        return COMMANDS[args.command](args)
    except ResultFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED_INPUT
    except (UnknownIdError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO_FAILURE


if __name__ == "__main__":
    sys.exit(main())
