"""Counteridentity algebra and the block structure of centrosymmetric matrices.

An order-n matrix C is centrosymmetric when ``J C J = C`` with J the
counteridentity.  For n = 2m it has the block form::

    [[A, JBJ],
     [B, JAJ]]

and for n = 2m + 1::

    [[A,  x,  JBJ],
     [y', c,  y'J],
     [B,  Jx, JAJ]]

Orthogonal similarity splits the spectrum over the reduced pair
``Mplus = A + JB`` (bordered by ``c``, ``sqrt(2) x`` and ``sqrt(2) y`` in odd
order) and ``Mminus = A - JB``.  ``reduce`` and ``inverse_reduce`` move
between the two descriptions; the flips are index reversals, so assembly is
exactly centrosymmetric in floating point.
"""

from __future__ import annotations

from typing import NamedTuple, Union

import numpy as np

from .errors import DimensionMismatch, NotCentrosymmetric

SQRT2 = np.sqrt(2.0)


class CentroBlocksEven(NamedTuple):
    A: np.ndarray
    B: np.ndarray


class CentroBlocksOdd(NamedTuple):
    A: np.ndarray
    B: np.ndarray
    x: np.ndarray
    y: np.ndarray
    c: float


CentroBlocks = Union[CentroBlocksEven, CentroBlocksOdd]


def counteridentity(n: int) -> np.ndarray:
    if n < 1:
        raise DimensionMismatch("order must be positive")
    return np.eye(n)[::-1].copy()


def flip(M: np.ndarray) -> np.ndarray:
    """J M J, i.e. a 180 degree rotation of the entries."""
    return np.ascontiguousarray(np.asarray(M)[::-1, ::-1])


def _square(M, name="matrix") -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {M.shape}")
    return M


def assemble_even(A, B) -> np.ndarray:
    A = _square(A, "A")
    B = _square(B, "B")
    if A.shape != B.shape:
        raise DimensionMismatch(f"A {A.shape} and B {B.shape} differ")
    return np.block([[A, flip(B)], [B, flip(A)]])


def assemble_odd(A, B, x, y, c) -> np.ndarray:
    A = _square(A, "A")
    B = _square(B, "B")
    m = A.shape[0]
    x = np.asarray(x, dtype=float).reshape(-1)
    y = np.asarray(y, dtype=float).reshape(-1)
    if B.shape != A.shape or x.shape != (m,) or y.shape != (m,):
        raise DimensionMismatch("blocks of an odd-order matrix have inconsistent sizes")
    n = 2 * m + 1
    C = np.empty((n, n))
    C[:m, :m] = A
    C[:m, m] = x
    C[:m, m + 1:] = flip(B)
    C[m, :m] = y
    C[m, m] = float(c)
    C[m, m + 1:] = y[::-1]
    C[m + 1:, :m] = B
    C[m + 1:, m] = x[::-1]
    C[m + 1:, m + 1:] = flip(A)
    return C


def assemble(blocks: CentroBlocks) -> np.ndarray:
    if isinstance(blocks, CentroBlocksOdd):
        return assemble_odd(*blocks)
    return assemble_even(*blocks)


def is_centrosymmetric(M) -> float:
    """Largest |c_ij - c_{n-i+1, n-j+1}|; zero means exactly centrosymmetric."""
    M = np.asarray(M, dtype=float)
    if M.size == 0:
        return 0.0
    return float(np.max(np.abs(M - M[::-1, ::-1])))


def is_nonnegative(M) -> float:
    """Smallest entry of M (the nonnegativity margin)."""
    M = np.asarray(M, dtype=float)
    return float(M.min()) if M.size else 0.0


def split(C, tol: float = 0.0) -> CentroBlocks:
    C = _square(C, "C")
    res = is_centrosymmetric(C)
    if res > tol:
        raise NotCentrosymmetric(f"centrosymmetry residual {res:.3e}")
    n = C.shape[0]
    m = n // 2
    if n % 2 == 0:
        return CentroBlocksEven(C[:m, :m].copy(), C[m:, :m].copy())
    return CentroBlocksOdd(C[:m, :m].copy(), C[m + 1:, :m].copy(),
                           C[:m, m].copy(), C[m, :m].copy(), float(C[m, m]))


def reduce(C, tol: float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(Mplus, Mminus)`` whose spectra together give that of C.

    In odd order ``Mplus = [[c, sqrt2 y'], [sqrt2 x, A + JB]]``.
    """
    blocks = split(C, tol)
    JB = blocks.B[::-1]
    plus = blocks.A + JB
    minus = blocks.A - JB
    if isinstance(blocks, CentroBlocksEven):
        return plus, minus
    m = blocks.A.shape[0]
    bordered = np.empty((m + 1, m + 1))
    bordered[0, 0] = blocks.c
    bordered[0, 1:] = SQRT2 * blocks.y
    bordered[1:, 0] = SQRT2 * blocks.x
    bordered[1:, 1:] = plus
    return bordered, minus


def inverse_reduce(Mplus, Mminus) -> np.ndarray:
    """Assemble the centrosymmetric matrix with the given reduced pair.

    Orders must satisfy ``len(Mplus) == len(Mminus)`` (even result) or
    ``len(Mplus) == len(Mminus) + 1`` (odd result).
    """
    P = _square(Mplus, "Mplus") if np.size(Mplus) else np.zeros((0, 0))
    M = _square(Mminus, "Mminus") if np.size(Mminus) else np.zeros((0, 0))
    p, q = P.shape[0], M.shape[0]
    if p == q:
        A = 0.5 * (P + M)
        B = 0.5 * (P - M)[::-1]
        return assemble_even(A, B)
    if p == q + 1:
        c = P[0, 0]
        y = P[0, 1:] / SQRT2
        x = P[1:, 0] / SQRT2
        S = P[1:, 1:]
        A = 0.5 * (S + M)
        B = 0.5 * (S - M)[::-1]
        return assemble_odd(A, B, x, y, c)
    raise DimensionMismatch(f"incompatible reduced orders {p} and {q}")


def block_diag(*blocks) -> np.ndarray:
    mats = [np.atleast_2d(np.asarray(b, dtype=float)) for b in blocks if np.size(b)]
    n = sum(b.shape[0] for b in mats)
    out = np.zeros((n, n))
    k = 0
    for b in mats:
        s = b.shape[0]
        out[k:k + s, k:k + s] = b
        k += s
    return out


def rotation_block(z: complex) -> np.ndarray:
    """Real 2x2 block [[a, -b], [b, a]] with eigenvalues a +/- ib."""
    a, b = z.real, z.imag
    return np.array([[a, -b], [b, a]])
