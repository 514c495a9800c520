"""
RatSwarm - 공용 테스트 픽스처
"""
import os
import sys

import numpy as np
import pytest

# 저장소 루트를 import 경로에 추가
sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from ratswarm.core.problem import Problem, SearchSpace  # noqa: E402
from ratswarm.core.rng import RngStream  # noqa: E402
from ratswarm.problems.registry import get_problem  # noqa: E402
from ratswarm.results.models import ExperimentManifest  # noqa: E402


@pytest.fixture
def rng():
    return RngStream(seed=42)


@pytest.fixture
def sphere_problem():
    return get_problem("F1")


@pytest.fixture
def square_space():
    return SearchSpace.uniform(2, -100.0, 100.0)


@pytest.fixture
def one_constraint_problem():
    """목적 1, 제약 g(x) = 0.1 (항상 위반)"""
    return Problem(
        name="one_constraint",
        space=SearchSpace.uniform(2, -1.0, 1.0),
        objective=lambda x: 1.0,
        constraints=(lambda x: 0.1,),
    )


@pytest.fixture
def small_manifest(tmp_path):
    """빠른 실행용 설정"""
    return ExperimentManifest(
        problems=["F1", "gear_train"],
        algorithms=["mrso", "rso"],
        population=6,
        iterations=15,
        runs=4,
        base_seed=7,
        output_dir=tmp_path / "results",
    )


@pytest.fixture
def random_points():
    return np.random.default_rng(2024)
