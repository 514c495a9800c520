"""
RatSwarm - 결과 파일 저장소
JSON 문서 + (알고리즘, 문제) 별 수렴 곡선 CSV
"""
import json
import logging
import math
from pathlib import Path
from typing import Any, List

import pandas as pd

from ..config.settings import CSV_HEADER
from ..core.errors import ResultFileError
from .models import ResultEntry, ResultFile

logger = logging.getLogger(__name__)


def json_safe(value: Any) -> Any:
    """
    중첩 dict/list 의 inf, -inf, nan 을 "inf", "-inf", "nan" 문자열로 바꾼다

    읽을 때는 모델의 float() 변환이 그대로 복원한다
    """
    if isinstance(value, float) and not math.isfinite(value):
        if math.isnan(value):
            return "nan"
        return "inf" if value > 0 else "-inf"
    if isinstance(value, dict):
        return {key: json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    return value


class ResultStore:
    """결과 디렉터리 관리자"""

    def __init__(self, out_dir: Path):
        """
        Args:
            out_dir: 결과 디렉터리 (없으면 저장 시 생성)
        """
        self.out_dir = Path(out_dir)

    def ensure_dir(self):
        """결과 디렉터리 생성 (실행 전에 호출해 쓰기 실패를 먼저 확인)"""
        self.out_dir.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def dumps(result_file: ResultFile) -> str:
        """결정적 JSON 직렬화 (키 정렬, 시각/경로 없음)"""
        document = json_safe(result_file.to_dict())
        return json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"

    def curve_path(self, algorithm: str, problem: str) -> Path:
        return self.out_dir / f"{algorithm}_{problem}.csv"

    def save(self, result_file: ResultFile, name: str) -> Path:
        """
        결과 문서와 곡선 CSV 저장

        Args:
            result_file: 저장할 문서
            name: JSON 파일 이름 (확장자 제외)

        Returns:
            JSON 파일 경로

        Raises:
            OSError: 디렉터리 생성/쓰기 실패
        """
        self.ensure_dir()
        json_path = self.out_dir / f"{name}.json"
        json_path.write_text(self.dumps(result_file), encoding="utf-8")
        logger.info("결과 저장: %s (%d entries)", json_path, len(result_file.entries))

        for entry in result_file.entries.values():
            if entry.histories:
                self.save_curves(entry)

        return json_path

    def save_curves(self, entry: ResultEntry) -> Path:
        """run,iter,best_fitness 형식의 수렴 곡선 CSV"""
        rows = [
            (run_index, t, value)
            for run_index, history in enumerate(entry.histories)
            for t, value in enumerate(history, start=1)
        ]
        frame = pd.DataFrame(rows, columns=CSV_HEADER)
        path = self.curve_path(entry.algorithm, entry.problem)
        frame.to_csv(path, index=False, lineterminator="\n")
        logger.info("수렴 곡선 저장: %s (%d rows)", path, len(frame))
        return path

    def save_text(self, name: str, text: str) -> Path:
        """요약 표 등 텍스트 파일 저장"""
        self.ensure_dir()
        path = self.out_dir / name
        path.write_text(text, encoding="utf-8")
        logger.info("파일 저장: %s", path)
        return path

    @staticmethod
    def load(path: Path) -> ResultFile:
        """
        결과 문서 읽기

        Raises:
            OSError: 파일 읽기 실패
            ResultFileError: JSON 문법/스키마 오류
        """
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except UnicodeDecodeError as e:
            raise ResultFileError(f"{path}: UTF-8 텍스트가 아닙니다") from e
        except json.JSONDecodeError as e:
            raise ResultFileError(f"{path}: JSON 파싱 실패 ({e.msg}, line {e.lineno})") from e

        result_file = ResultFile.from_dict(data)
        logger.info("결과 읽기: %s (%d entries)", path, len(result_file.entries))
        return result_file

    def load_curves(self, algorithm: str, problem: str) -> List[List[float]]:
        """CSV 곡선 → 실행별 best_fitness 목록"""
        frame = pd.read_csv(self.curve_path(algorithm, problem))
        if list(frame.columns) != CSV_HEADER:
            raise ResultFileError(f"CSV 헤더 불일치: {list(frame.columns)}")
        return [
            group.sort_values("iter")["best_fitness"].tolist()
            for _, group in frame.groupby("run", sort=True)
        ]
