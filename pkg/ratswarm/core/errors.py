"""
RatSwarm - 예외 정의
"""


class RatSwarmError(Exception):
    """RatSwarm 기본 예외"""


class InvalidRangeError(RatSwarmError, ValueError):
    """구간 하한이 상한 이상"""


class DimensionError(RatSwarmError, ValueError):
    """벡터/행렬 크기 불일치"""


class EmptyInputError(RatSwarmError, ValueError):
    """빈 표본"""


class UnknownIdError(RatSwarmError, KeyError):
    """등록되지 않은 문제/알고리즘 ID"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class ResultFileError(RatSwarmError, ValueError):
    """결과 파일 형식 오류"""
