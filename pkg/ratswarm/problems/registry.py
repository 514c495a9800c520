"""
RatSwarm - 문제 레지스트리
F1-F23 + 공학 설계 6종, ID 로 조회
"""
import hashlib
from functools import lru_cache
from typing import Callable, Dict, List

from ..core.errors import UnknownIdError
from ..core.problem import Problem
from .benchmarks import BENCHMARKS, make_problem
from .engineering import ENGINEERING_SPECS

# ID → Problem 생성 함수 (워커 프로세스에서 ID 로 다시 만든다)
PROBLEM_REGISTRY: Dict[str, Callable[[], Problem]] = {
    **{fid: (lambda spec=spec: make_problem(spec)) for fid, spec in BENCHMARKS.items()},
    **{pid: spec.builder for pid, spec in ENGINEERING_SPECS.items()},
}

_ALIASES = {pid.lower(): pid for pid in PROBLEM_REGISTRY}


def resolve_problem_id(problem_id: str) -> str:
    """대소문자 무관 ID → 정식 ID ("f13" → "F13")"""
    key = str(problem_id).strip().lower().replace("-", "_")
    if key not in _ALIASES:
        raise UnknownIdError(f"알 수 없는 문제 ID: {problem_id}")
    return _ALIASES[key]


@lru_cache(maxsize=None)
def _build(canonical_id: str) -> Problem:
    return PROBLEM_REGISTRY[canonical_id]()


def get_problem(problem_id: str) -> Problem:
    """ID 로 Problem 조회 (프로세스당 한 번 생성)"""
    return _build(resolve_problem_id(problem_id))


def list_problem_ids() -> List[str]:
    """등록 순서 그대로: F1..F23, 이어서 공학 설계 문제"""
    return list(PROBLEM_REGISTRY.keys())


def is_engineering(problem_id: str) -> bool:
    return resolve_problem_id(problem_id) in ENGINEERING_SPECS


def stream_offset(algorithm: str, problem_id: str) -> int:
    """
    (알고리즘, 문제) 쌍의 난수 스트림 오프셋

    문제 목록이 늘어나도 기존 쌍의 값은 바뀌지 않는다 (sha256 앞 4바이트).
    """
    key = f"{algorithm.lower()}:{resolve_problem_id(problem_id)}"
    return int.from_bytes(hashlib.sha256(key.encode("utf-8")).digest()[:4], "big")
