"""Printed matrices of the two worked examples, kept verbatim as test fixtures."""

from __future__ import annotations

import numpy as np

from .errors import UnknownFixture

EXAMPLE1_SPECTRUM = [20, -1, -2, -3, complex(-2, 2), complex(-2, -2),
                     complex(-3, 1), complex(-3, -1), complex(-1, 1), complex(-1, -1)]
EXAMPLE1_SHIFTED = [18] + EXAMPLE1_SPECTRUM[1:]

# zero-diagonal base of the prescribed-diagonal step and its diagonal
EXAMPLE1_ZERO_DIAG = np.array([
    [0, 1, 2, 2, 2],
    [1, 0, 2, 2, 2],
    [2, 1, 0, 2, 2],
    [4, 1, 2, 0, 0],
    [0, 1, 2, 4, 0],
], dtype=float)
EXAMPLE1_DIAGONAL = np.array([3, 3, 3, 1, 1], dtype=float)
EXAMPLE1_PLUS = np.array([
    [3, 4, 5, 3, 3],
    [4, 3, 5, 3, 3],
    [5, 4, 3, 3, 3],
    [7, 4, 5, 1, 1],
    [3, 4, 5, 5, 1],
], dtype=float)
EXAMPLE1_MINUS = np.array([
    [-3, 0, 0, 0, 0],
    [0, -3, -1, 0, 0],
    [0, 1, -3, 0, 0],
    [0, 0, 0, -1, -1],
    [0, 0, 0, 1, -1],
], dtype=float)

EXAMPLE1_C_PRIME = 0.5 * np.array([
    [0, 4, 5, 3, 3, 3, 3, 5, 4, 6],
    [4, 0, 4, 3, 3, 3, 3, 6, 6, 4],
    [5, 5, 0, 3, 3, 3, 3, 6, 3, 5],
    [7, 4, 5, 0, 0, 2, 2, 5, 4, 7],
    [3, 4, 5, 6, 0, 2, 4, 5, 4, 3],
    [3, 4, 5, 4, 2, 0, 6, 5, 4, 3],
    [7, 4, 5, 2, 2, 0, 0, 5, 4, 7],
    [5, 3, 6, 3, 3, 3, 3, 0, 5, 5],
    [4, 6, 6, 3, 3, 3, 3, 4, 0, 4],
    [6, 4, 5, 3, 3, 3, 3, 5, 4, 0],
], dtype=float)

EXAMPLE1_C = np.array([
    [2, 22, 27, 17, 17, 17, 17, 27, 22, 32],
    [22, 2, 22, 17, 17, 17, 17, 32, 32, 22],
    [27, 27, 2, 17, 17, 17, 17, 32, 17, 27],
    [37, 22, 27, 2, 2, 12, 12, 27, 22, 37],
    [17, 22, 27, 32, 2, 12, 22, 27, 22, 17],
    [17, 22, 27, 22, 12, 2, 32, 27, 22, 17],
    [37, 22, 27, 12, 12, 2, 2, 27, 22, 37],
    [27, 17, 32, 17, 17, 17, 17, 2, 27, 27],
    [22, 32, 32, 17, 17, 17, 17, 22, 2, 22],
    [32, 22, 27, 17, 17, 17, 17, 27, 22, 2],
], dtype=float) / 10.0

EXAMPLE2_SPECTRUM = [10, 3, complex(1, 1), complex(1, -1), complex(-2, 2), complex(-2, -2),
                     complex(-2, 2), complex(-2, -2)]
EXAMPLE2_BASE = [10, 3, complex(1, 1), complex(1, -1)]
EXAMPLE2_GROUP = [complex(-2, 2), complex(-2, -2)]
EXAMPLE2_ANCHORS = (4.0, 3.5)

EXAMPLE2_A1 = np.array([[0, 0, 4], [2, 0, 2], [0, 4, 0]], dtype=float)
EXAMPLE2_B = np.array([
    [4, 1, 0, 3],
    [5.5, 3.5, 2.5, 6.5],
    [6.5, 2.5, 3.5, 5.5],
    [3, 0, 1, 4],
])
EXAMPLE2_CMAT = np.array([
    [0, 0, 0, 1, 0, 0, 0, 3],
    [5.5, 0, 0, 0, 2.5, 0, 0, 6.5],
    [6.5, 0, 0, 2.5, 0, 0, 0, 5.5],
    [3, 0, 0, 0, 1, 0, 0, 0],
])
EXAMPLE2_X = np.zeros((8, 4))
EXAMPLE2_X[0:3, 0] = 1.0
EXAMPLE2_X[3, 1] = 1.0
EXAMPLE2_X[4, 2] = 1.0
EXAMPLE2_X[5:8, 3] = 1.0
EXAMPLE2_RESULT = np.array([
    [0, 0, 4, 1, 0, 0, 0, 3],
    [2, 0, 2, 1, 0, 0, 0, 3],
    [0, 4, 0, 1, 0, 0, 0, 3],
    [5.5, 0, 0, 3.5, 2.5, 0, 0, 6.5],
    [6.5, 0, 0, 2.5, 3.5, 0, 0, 5.5],
    [3, 0, 0, 0, 1, 0, 4, 0],
    [3, 0, 0, 0, 1, 2, 0, 2],
    [3, 0, 0, 0, 1, 4, 0, 0],
])


def example2_block_matrix() -> np.ndarray:
    from .centro import block_diag, flip
    return block_diag(EXAMPLE2_A1, [[3.5]], [[3.5]], flip(EXAMPLE2_A1))


FIXTURES = {
    "example1": {
        "matrices": {"C": EXAMPLE1_C, "C_prime": EXAMPLE1_C_PRIME},
        "spectra": {"C": EXAMPLE1_SPECTRUM, "C_prime": EXAMPLE1_SHIFTED},
        "spectrum": EXAMPLE1_SPECTRUM,
    },
    "example2": {
        "matrices": {"A+XC": EXAMPLE2_RESULT},
        "spectra": {"A+XC": EXAMPLE2_SPECTRUM},
        "spectrum": EXAMPLE2_SPECTRUM,
    },
}


def get_fixture(name: str) -> dict:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
