"""
RatSwarm - 기본 설정(N=30, T=500, 시드 1..30) 재현 검사

수 분이 걸리므로 slow 마커: pytest -m slow

공격 단계 |gbest - P| 때문에 첫 반복 이후 모든 좌표가 0 이상이 된다.
최적점 좌표가 음수인 문제(F12, F14)는 도달할 수 없다. 반복 계수는 모든
개체가 공유하므로 개체군이 gbest 쪽으로 빨리 모이고, 공학 문제는 좁은
실행 가능 영역을 찾지 못한 채 멈춘다. 순서/구간 검사는 xfail 로 둔다.
"""
import pytest

from ratswarm.core.experiment_runner import ExperimentRunner
from ratswarm.problems.engineering import ENGINEERING_IDS
from ratswarm.results.models import ExperimentManifest

pytestmark = pytest.mark.slow

ORDERING_PROBLEMS = ["F6", "F7", "F8", "F12", "F14"]

ENGINEERING_BRACKETS = {
    "pressure_vessel": 9.0e3,
    "spring_design": 2.0e-2,
    "cantilever_beam": 1.40,
    "gear_train": 1e-9,
    "welded_beam": 2.5,
}

NONNEGATIVE_ORTHANT = pytest.mark.xfail(
    reason="좌표가 0 이상으로 묶이고 공유 계수로 개체군이 gbest 에 빨리 모여 탐색이 멈춘다",
    strict=False,
)


def _run_both(problems):
    manifest = ExperimentManifest(problems=list(problems), algorithms=["mrso", "rso"])
    return ExperimentRunner(jobs=4).run(manifest)


def _mrso_wins(results, problems):
    return sum(
        results.get("mrso", p).summary.mean < results.get("rso", p).summary.mean
        for p in problems
    )


@pytest.fixture(scope="module")
def sphere_results():
    return _run_both(["F1"])


@pytest.fixture(scope="module")
def ordering_results():
    return _run_both(ORDERING_PROBLEMS)


@pytest.fixture(scope="module")
def engineering_results():
    return _run_both(ENGINEERING_IDS)


@pytest.mark.parametrize("algorithm", ["mrso", "rso"])
def test_sphere_exploitation(sphere_results, algorithm):
    entry = sphere_results.get(algorithm, "F1")
    assert entry.summary.n_runs == 30
    assert entry.summary.mean <= 1e-3


def test_evaluation_budget(sphere_results):
    for algorithm in ("mrso", "rso"):
        assert sphere_results.get(algorithm, "F1").evaluations == 30 * (500 + 1) * 30


@NONNEGATIVE_ORTHANT
def test_mrso_beats_rso_on_classical(ordering_results):
    assert _mrso_wins(ordering_results, ORDERING_PROBLEMS) >= 4


@NONNEGATIVE_ORTHANT
@pytest.mark.parametrize("problem_id, upper", sorted(ENGINEERING_BRACKETS.items()))
def test_engineering_mean_within_bracket(engineering_results, problem_id, upper):
    assert engineering_results.get("mrso", problem_id).summary.mean <= upper


@NONNEGATIVE_ORTHANT
def test_mrso_beats_rso_on_engineering(engineering_results):
    assert _mrso_wins(engineering_results, ENGINEERING_IDS) >= 5
