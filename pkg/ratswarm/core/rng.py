"""
RatSwarm - 결정적 난수 스트림
PCG64 + SeedSequence 고정: 같은 시드 → 같은 난수열 (플랫폼 무관)
"""
from typing import Optional

import numpy as np

from .errors import InvalidRangeError


class RngStream:
    """단일 소유 난수 스트림"""

    def __init__(self, seed: int = 0, offset: int = 0, _seed_seq: Optional[np.random.SeedSequence] = None):
        """
        Args:
            seed: 64비트 실행 시드 (>= 0)
            offset: (알고리즘, 문제) 쌍별 스트림 오프셋 (>= 0)
        """
        if _seed_seq is None:
            if seed < 0 or offset < 0:
                raise ValueError(f"시드와 오프셋은 0 이상이어야 합니다: seed={seed}, offset={offset}")
            _seed_seq = np.random.SeedSequence([seed, offset])
        self._seed_seq = _seed_seq
        self._generator = np.random.Generator(np.random.PCG64(_seed_seq))

    def random(self, size=None):
        """[0, 1) 균등 난수"""
        return self._generator.random(size)

    def uniform(self, a: float, b: float) -> float:
        """[a, b) 균등 난수"""
        if not a < b:
            raise InvalidRangeError(f"잘못된 구간: [{a}, {b})")
        value = a + (b - a) * float(self._generator.random())
        # 반올림으로 b에 닿는 경우 방지
        if value >= b:
            value = float(np.nextafter(b, a))
        return value

    def spawn(self) -> "RngStream":
        """독립 하위 스트림 생성 (부모 난수열은 소비하지 않음)"""
        child = self._seed_seq.spawn(1)[0]
        return RngStream(_seed_seq=child)


def uniform(rng: RngStream, a: float, b: float) -> float:
    """rng에서 [a, b) 균등 난수 하나를 뽑는다"""
    return rng.uniform(a, b)
