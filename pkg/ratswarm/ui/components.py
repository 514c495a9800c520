"""
RatSwarm - 텍스트 출력 컴포넌트
문제 목록, 요약 표 (md/csv/json), 비교 보고서
"""
import json
from typing import List, Union

import pandas as pd

from ..config.settings import format_p_value, format_sci
from ..problems.registry import get_problem, list_problem_ids
from ..results.comparison import ComparisonReport, compare_result_files
from ..results.models import ResultFile
from ..results.result_store import json_safe

TABLE_ALGORITHM_ORDER = ["mrso", "rso"]


def _to_markdown(frame: pd.DataFrame) -> str:
    """DataFrame → Markdown 파이프 표"""
    header = "| " + " | ".join(str(c) for c in frame.columns) + " |"
    rule = "|" + "|".join("---" for _ in frame.columns) + "|"
    body = ["| " + " | ".join(str(v) for v in row) + " |" for row in frame.itertuples(index=False)]
    return "\n".join([header, rule, *body]) + "\n"


def _to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def _to_json(data: Union[List[dict], dict]) -> str:
    return json.dumps(json_safe(data), indent=2, allow_nan=False) + "\n"


def _format_bounds(lower, upper) -> str:
    if len(set(lower)) == 1 and len(set(upper)) == 1:
        return f"[{lower[0]:g}, {upper[0]:g}]"
    return "[" + ", ".join(f"[{lo:g}, {hi:g}]" for lo, hi in zip(lower, upper)) + "]"


def render_problem_list(fmt: str = "md") -> str:
    """등록된 문제 목록"""
    records = []
    for problem_id in list_problem_ids():
        records.append({"id": problem_id, **get_problem(problem_id).to_dict()})

    if fmt == "json":
        return _to_json(records)

    if fmt == "csv":
        frame = pd.DataFrame([
            {
                "id": r["id"],
                "dim": r["dim"],
                "bounds": _format_bounds(r["lower"], r["upper"]),
                "known_best": r["known_best"],
                "category": r["category"],
                "constraints": r["constraints"],
            }
            for r in records
        ])
        return _to_csv(frame)

    lines = []
    for r in records:
        line = (
            f"{r['id']} dim={r['dim']} bounds={_format_bounds(r['lower'], r['upper'])} "
            f"best={format_sci(r['known_best'])} ({r['category']}"
        )
        if r["constraints"]:
            line += f", {r['constraints']} constraints"
        lines.append(line + ")")
    return "\n".join(lines) + "\n"


def _table_algorithms(result_file: ResultFile) -> List[str]:
    present = result_file.algorithms()
    ordered = [a for a in TABLE_ALGORITHM_ORDER if a in present]
    return ordered + [a for a in present if a not in ordered]


def summary_records(result_file: ResultFile) -> List[dict]:
    """요약 표의 원시 값 (문제별 평균/표준편차, mrso·rso 가 모두 있으면 p-value)"""
    algorithms = _table_algorithms(result_file)
    problems = list(dict.fromkeys(p for a in algorithms for p in result_file.problems(a)))

    comparisons = {}
    if set(TABLE_ALGORITHM_ORDER) <= set(algorithms):
        report = compare_result_files(result_file, result_file, "mrso", "rso")
        comparisons = {row.problem: row for row in report.rows}

    records = []
    for problem in problems:
        record = {"problem": problem}
        for algo in algorithms:
            entry = result_file.get(algo, problem)
            record[f"{algo}_avg"] = entry.summary.mean if entry else None
            record[f"{algo}_std"] = entry.summary.std if entry else None
        if comparisons:
            row = comparisons.get(problem)
            record["p_value"] = row.result.p_value if row else None
            record["tied"] = row.tied if row else None
        records.append(record)
    return records


def render_summary_table(result_file: ResultFile, fmt: str = "md") -> str:
    """Fun | MRSO avg | MRSO std | RSO avg | RSO std | p-value 표"""
    records = summary_records(result_file)
    if fmt == "json":
        return _to_json(records)

    algorithms = _table_algorithms(result_file)
    rows = []
    for record in records:
        row = {"Fun": record["problem"]}
        for algo in algorithms:
            for stat, column in (("avg", "avg"), ("std", "std")):
                value = record[f"{algo}_{stat}"]
                row[f"{algo.upper()} {column}"] = "-" if value is None else format_sci(value)
        if "p_value" in record:
            p_value = record["p_value"]
            row["p-value"] = "-" if p_value is None else format_p_value(p_value, record["tied"])
        rows.append(row)

    frame = pd.DataFrame(rows)
    return _to_csv(frame) if fmt == "csv" else _to_markdown(frame)


def render_comparison_report(report: ComparisonReport, fmt: str = "md") -> str:
    """문제별 p-value + Friedman 평균 순위"""
    if fmt == "json":
        return _to_json(report.to_dict())

    frame = pd.DataFrame([
        {
            "Fun": row.problem,
            f"{report.label_a} avg": format_sci(row.mean_a),
            f"{report.label_b} avg": format_sci(row.mean_b),
            "p-value": format_p_value(row.result.p_value, row.tied),
            "significant": "yes" if row.result.significant else "no",
        }
        for row in report.rows
    ])

    if fmt == "csv":
        return _to_csv(frame)

    ranks = ", ".join(
        f"{name}={rank:.3f}" for name, rank in zip(report.ranks.algorithms, report.ranks.mean_ranks)
    )
    wins = ", ".join(f"{name}={count}" for name, count in report.wins().items())
    return _to_markdown(frame) + f"\nFriedman mean rank: {ranks}\nSignificant wins: {wins}\n"
