"""
RatSwarm - 실험 실행기 / 결과 파일 / 비교 테스트
"""
import json
import math

import numpy as np
import pytest

from ratswarm.core.errors import ResultFileError
from ratswarm.core.experiment_runner import ExperimentRunner, build_entry
from ratswarm.core.optimizers import RunConfig, run
from ratswarm.core.stats import summarize
from ratswarm.problems.registry import get_problem, stream_offset
from ratswarm.results import (
    ExperimentManifest,
    NoSharedProblemsError,
    ResultEntry,
    ResultFile,
    ResultStore,
    compare_result_files,
)
from ratswarm.ui.components import render_comparison_report, render_problem_list, render_summary_table


def _entry(algorithm, problem, values):
    return ResultEntry(algorithm=algorithm, problem=problem, summary=summarize(values),
                       final_fitnesses=list(values), best_position=[0.0])


# ==================== 실행기 ====================

class TestExperimentRunner:
    def test_tasks_use_base_seed_plus_index(self, small_manifest):
        tasks = ExperimentRunner().build_tasks(small_manifest)
        assert len(tasks) == 2 * 2 * 4
        first_pair = tasks[:4]
        assert [config.seed for _, config in first_pair] == [7, 8, 9, 10]
        assert [config.run_index for _, config in first_pair] == [0, 1, 2, 3]
        assert all(config.stream_offset == stream_offset("mrso", "F1") for _, config in first_pair)

    def test_entries_match_direct_runs(self, small_manifest):
        result_file = ExperimentRunner().run(small_manifest)
        entry = result_file.get("rso", "gear_train")
        offset = stream_offset("rso", "gear_train")
        direct = [
            run(get_problem("gear_train"), RunConfig(
                algorithm="rso", population=6, max_iterations=15, seed=7 + i,
                stream_offset=offset, run_index=i,
            )).final_fitness
            for i in range(4)
        ]
        assert entry.final_fitnesses == direct
        assert entry.summary.n_runs == 4
        assert entry.evaluations == 6 * 16 * 4
        assert len(entry.histories) == 4

    def test_parallel_output_identical(self, small_manifest):
        sequential = ResultStore.dumps(ExperimentRunner(jobs=1).run(small_manifest))
        parallel = ResultStore.dumps(ExperimentRunner(jobs=2).run(small_manifest))
        assert sequential == parallel

    def test_adding_problem_keeps_existing_results(self, small_manifest):
        base = ExperimentRunner().run(small_manifest)
        small_manifest.problems.append("F9")
        extended = ExperimentRunner().run(small_manifest)
        assert base.get("mrso", "F1").final_fitnesses == extended.get("mrso", "F1").final_fitnesses

    def test_entry_ordered_by_run_index(self):
        problem = get_problem("F1")
        records = [run(problem, RunConfig(population=3, max_iterations=2, seed=10 + i, run_index=i))
                   for i in (1, 0)]
        entry = build_entry("mrso", "F1", records)
        assert entry.final_fitnesses == [records[1].final_fitness, records[0].final_fitness]

    def test_invalid_jobs(self):
        with pytest.raises(ValueError):
            ExperimentRunner(jobs=0)


# ==================== 결과 파일 ====================

class TestResultStore:
    def test_save_and_load(self, small_manifest):
        result_file = ExperimentRunner().run(small_manifest)
        store = ResultStore(small_manifest.output_dir)
        path = store.save(result_file, "batch")

        loaded = ResultStore.load(path)
        assert loaded.to_dict() == result_file.to_dict()
        assert loaded.manifest.runs == 4

    def test_document_has_no_output_path(self, small_manifest):
        result_file = ExperimentRunner().run(small_manifest)
        text = ResultStore.dumps(result_file)
        assert str(small_manifest.output_dir) not in text
        assert json.loads(text)["schema_version"] == 1

    def test_curves(self, small_manifest):
        result_file = ExperimentRunner().run(small_manifest)
        store = ResultStore(small_manifest.output_dir)
        store.save(result_file, "batch")

        lines = store.curve_path("mrso", "F1").read_text().splitlines()
        assert lines[0] == "run,iter,best_fitness"
        assert len(lines) == 1 + 4 * 15

        curves = store.load_curves("mrso", "F1")
        assert len(curves) == 4
        for curve in curves:
            assert all(b <= a for a, b in zip(curve, curve[1:]))
        assert [c[-1] for c in curves] == pytest.approx(result_file.get("mrso", "F1").final_fitnesses)

    def test_non_finite_values_are_standard_json(self, tmp_path):
        result_file = ResultFile(manifest=ExperimentManifest(problems=["spring_design"]))
        result_file.add(ResultEntry(
            algorithm="mrso", problem="spring_design", summary=summarize([1.0, 2.0]),
            final_fitnesses=[1.0, math.inf, -math.inf], best_position=[0.1, 0.3, 10.0],
            best_violation=math.inf,
        ))
        text = ResultStore.dumps(result_file)
        assert "Infinity" not in text

        def reject(token):
            raise ValueError(token)

        entry = json.loads(text, parse_constant=reject)["results"]["mrso"]["spring_design"]
        assert entry["final_fitnesses"] == [1.0, "inf", "-inf"]

        path = ResultStore(tmp_path).save(result_file, "non_finite")
        loaded = ResultStore.load(path).get("mrso", "spring_design")
        assert loaded.final_fitnesses == [1.0, math.inf, -math.inf]
        assert loaded.best_violation == math.inf

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(ResultFileError):
            ResultStore.load(path)

    @pytest.mark.parametrize("document", [
        {"schema_version": 99, "manifest": {}, "results": {}},
        {"schema_version": 1, "results": {}},
        {"schema_version": 1, "manifest": {"problems": []}, "results": {}},
        [1, 2, 3],
    ])
    def test_schema_errors(self, tmp_path, document):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(document))
        with pytest.raises(ResultFileError):
            ResultStore.load(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            ResultStore.load(tmp_path / "absent.json")

    def test_manifest_validation(self):
        with pytest.raises(ValueError):
            ExperimentManifest(problems=["F1"], runs=0)


# ==================== 비교 ====================

class TestComparison:
    def test_self_comparison(self, small_manifest):
        result_file = ExperimentRunner().run(small_manifest)
        report = compare_result_files(result_file, result_file, "mrso", "mrso")
        assert all(row.result.p_value == 1.0 for row in report.rows)
        assert report.ranks.mean_ranks == [1.5, 1.5]
        assert report.label_a != report.label_b

    def test_separated_samples_significant(self):
        a = ResultFile(manifest=ExperimentManifest(problems=["F6"], algorithms=["mrso"]))
        b = ResultFile(manifest=ExperimentManifest(problems=["F6"], algorithms=["rso"]))
        a.add(_entry("mrso", "F6", np.linspace(0.0, 1.0, 30)))
        b.add(_entry("rso", "F6", np.linspace(5.0, 6.0, 30)))

        report = compare_result_files(a, b)
        row = report.rows[0]
        assert row.result.significant
        assert row.winner == "a"
        assert report.wins() == {"mrso": 1, "rso": 0}
        assert report.ranks.mean_ranks == [1.0, 2.0]

    def test_disjoint_problems(self):
        a = ResultFile(manifest=ExperimentManifest(problems=["F1"]))
        b = ResultFile(manifest=ExperimentManifest(problems=["F2"]))
        a.add(_entry("mrso", "F1", [1.0, 2.0]))
        b.add(_entry("mrso", "F2", [1.0, 2.0]))
        with pytest.raises(NoSharedProblemsError):
            compare_result_files(a, b)

    def test_zero_means_marked_tied(self):
        suite = ResultFile(manifest=ExperimentManifest(problems=["F9"], algorithms=["mrso", "rso"]))
        suite.add(_entry("mrso", "F9", [0.0, 1e-15, 0.0]))
        suite.add(_entry("rso", "F9", [0.0, 0.0, 2e-15]))
        report = compare_result_files(suite, suite, "mrso", "rso")
        assert report.rows[0].tied


# ==================== 출력 ====================

class TestRendering:
    def test_problem_list(self):
        text = render_problem_list("md")
        lines = text.strip().splitlines()
        assert len(lines) == 29
        assert any(line.startswith("F13 dim=30") for line in lines)
        assert render_problem_list("md") == text

    def test_problem_list_json_has_corrections(self):
        records = json.loads(render_problem_list("json"))
        by_id = {r["id"]: r for r in records}
        assert by_id["pressure_vessel"]["corrections"]
        assert by_id["gear_train"]["integer_dims"] == [0, 1, 2, 3]

    def test_summary_table_columns(self):
        suite = ResultFile(manifest=ExperimentManifest(problems=["F9", "F1"], algorithms=["mrso", "rso"]))
        suite.add(_entry("mrso", "F9", [0.0, 0.0]))
        suite.add(_entry("rso", "F9", [0.0, 0.0]))
        suite.add(_entry("mrso", "F1", [0.816, 0.816]))
        suite.add(_entry("rso", "F1", [1.5, 2.5]))

        lines = render_summary_table(suite, "md").splitlines()
        assert lines[0] == "| Fun | MRSO avg | MRSO std | RSO avg | RSO std | p-value |"
        assert lines[2].startswith("| F9 | 0.000E+00 | 0.000E+00 | 0.000E+00 | 0.000E+00 | = |")
        assert "8.160E-01" in lines[3]

        csv_lines = render_summary_table(suite, "csv").splitlines()
        assert csv_lines[0] == "Fun,MRSO avg,MRSO std,RSO avg,RSO std,p-value"
        assert len(csv_lines) == 3

    def test_single_algorithm_table_has_no_p_value(self):
        single = ResultFile(manifest=ExperimentManifest(problems=["F1"], algorithms=["rso"]))
        single.add(_entry("rso", "F1", [1.0, 3.0]))
        header = render_summary_table(single, "md").splitlines()[0]
        assert header == "| Fun | RSO avg | RSO std |"

    def test_comparison_report(self, small_manifest):
        result_file = ExperimentRunner().run(small_manifest)
        report = compare_result_files(result_file, result_file, "mrso", "rso")
        text = render_comparison_report(report, "md")
        assert "Friedman mean rank: mrso=" in text
        assert json.loads(render_comparison_report(report, "json"))["label_b"] == "rso"
