"""
RatSwarm - 설정 및 상수 정의
"""
import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

# ====================
# 경로 설정
# ====================
BASE_DIR = Path(__file__).parent.parent
DEFAULT_OUTPUT_DIR = Path(os.getenv("RATSWARM_OUTPUT_DIR", "results"))

# ====================
# 실험 기본값
# ====================
DEFAULT_POPULATION = 30
DEFAULT_ITERATIONS = 500
DEFAULT_RUNS = 30
DEFAULT_BASE_SEED = 1
DEFAULT_JOBS = int(os.getenv("RATSWARM_JOBS", "1"))

# 알고리즘 설명
ALGORITHMS = {
    "rso": "Rat Swarm Optimizer - 선형 감소 A 스케줄",
    "mrso": "Modified Rat Swarm Optimizer - F1·F2·F3 곱 A 스케줄",
}

# ====================
# 계수 범위
# ====================
R_RANGE = (1.0, 5.0)
C_RANGE = (0.0, 2.0)

# ====================
# 제약 처리
# ====================
PENALTY_LAMBDA = 1e10
DISCRETE_STEP = 0.0625       # 압력용기 두께 단위 (inch)
SINGULARITY_EPS = 1e-12      # 3-bar truss 분모 하한

# ====================
# 통계 설정
# ====================
SIGNIFICANCE_LEVEL = 0.05
EXACT_TEST_MAX_SIZE = 12     # 이 크기 이하 + 동점 없음 → 정확 분포
TIE_TOLERANCE = 1e-12

# ====================
# 결과 파일 설정
# ====================
RESULT_SCHEMA_VERSION = 1
CSV_HEADER = ["run", "iter", "best_fitness"]
OUTPUT_FORMATS = ["json", "csv", "md"]

# 종료 코드
EXIT_OK = 0
EXIT_BAD_ARGUMENTS = 2
EXIT_IO_FAILURE = 3
EXIT_MALFORMED_INPUT = 4

# ====================
# 로깅 설정
# ====================
LOG_LEVEL = os.getenv("RATSWARM_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


# ====================
# 유틸리티 함수
# ====================
def configure_logging(level: str = LOG_LEVEL) -> None:
    """루트 로거 설정 (stderr)"""
    logging.basicConfig(level=level.upper(), format=LOG_FORMAT)


def format_sci(value: float) -> str:
    """지수 표기 포맷팅 (예: 8.160E-01)"""
    return f"{value:.3E}"


def format_p_value(p_value: float, tied: bool = False) -> str:
    """p-value 포맷팅, 동일 결과는 '='"""
    if tied:
        return "="
    return format_sci(p_value)


if __name__ == "__main__":
    print(f"Output dir: {DEFAULT_OUTPUT_DIR}")
    print(f"Defaults: N={DEFAULT_POPULATION}, T={DEFAULT_ITERATIONS}, runs={DEFAULT_RUNS}")
    print(f"Algorithms: {list(ALGORITHMS.keys())}")
