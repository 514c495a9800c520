"""
RatSwarm - 고정 차원 벤치마크 상수표

표준 벤치마크 문헌 값
(De Jong foxholes, Kowalik, Hartmann 3/6, Shekel m=5/7/10)
"""
from dataclasses import dataclass, field

import numpy as np


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


# De Jong Shekel's foxholes (F14): 2 x 25
_FOXHOLE_GRID = [-32.0, -16.0, 0.0, 16.0, 32.0]
FOXHOLES_A = _frozen([
    _FOXHOLE_GRID * 5,
    [v for v in _FOXHOLE_GRID for _ in range(5)],
])

# Kowalik (F15): b_i 는 원 자료의 역수
KOWALIK_A = _frozen([0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                     0.0456, 0.0342, 0.0323, 0.0235, 0.0246])
KOWALIK_B = _frozen(1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0,
                                    8.0, 10.0, 12.0, 14.0, 16.0]))

# Hartmann 3 (F19)
HARTMANN3_A = _frozen([
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
])
HARTMANN3_C = _frozen([1.0, 1.2, 3.0, 3.2])
HARTMANN3_P = _frozen([
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
])

# Hartmann 6 (F20)
HARTMANN6_A = _frozen([
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
])
HARTMANN6_C = _frozen([1.0, 1.2, 3.0, 3.2])
HARTMANN6_P = _frozen([
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
])

# Shekel (F21-F23): 앞쪽 m개 행 사용
SHEKEL_ALPHA = _frozen([
    [4.0, 4.0, 4.0, 4.0],
    [1.0, 1.0, 1.0, 1.0],
    [8.0, 8.0, 8.0, 8.0],
    [6.0, 6.0, 6.0, 6.0],
    [3.0, 7.0, 3.0, 7.0],
    [2.0, 9.0, 2.0, 9.0],
    [5.0, 5.0, 3.0, 3.0],
    [8.0, 1.0, 8.0, 1.0],
    [6.0, 2.0, 6.0, 2.0],
    [7.0, 3.6, 7.0, 3.6],
])
SHEKEL_C = _frozen([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


@dataclass(frozen=True, eq=False)
class ConstantTables:
    """F14-F23 상수 묶음"""
    foxholes_a: np.ndarray = field(default_factory=lambda: FOXHOLES_A)
    kowalik_a: np.ndarray = field(default_factory=lambda: KOWALIK_A)
    kowalik_b: np.ndarray = field(default_factory=lambda: KOWALIK_B)
    hartmann3_a: np.ndarray = field(default_factory=lambda: HARTMANN3_A)
    hartmann3_c: np.ndarray = field(default_factory=lambda: HARTMANN3_C)
    hartmann3_p: np.ndarray = field(default_factory=lambda: HARTMANN3_P)
    hartmann6_a: np.ndarray = field(default_factory=lambda: HARTMANN6_A)
    hartmann6_c: np.ndarray = field(default_factory=lambda: HARTMANN6_C)
    hartmann6_p: np.ndarray = field(default_factory=lambda: HARTMANN6_P)
    shekel_alpha: np.ndarray = field(default_factory=lambda: SHEKEL_ALPHA)
    shekel_c: np.ndarray = field(default_factory=lambda: SHEKEL_C)

    def shekel(self, m: int):
        """m = 5, 7, 10 (alpha, c)"""
        if m not in (5, 7, 10):
            raise ValueError(f"Shekel m은 5, 7, 10 중 하나여야 합니다: {m}")
        return self.shekel_alpha[:m], self.shekel_c[:m]


CONSTANTS = ConstantTables()
