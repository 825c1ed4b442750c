"""Spectral perturbations and the nonnegative building blocks they act on.

Rank-one (Brauer) and rank-r (Rado) updates, Perron vectors, companion
realizations of zero-sum Suleimanova lists, constant-row-sum similarity and
the prescribed-diagonal realization built from them.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .centro import is_centrosymmetric
from .errors import (
    CompanionNotNonnegative,
    ConvergenceFailure,
    DiagonalSumMismatch,
    DimensionMismatch,
    NegativeEntryInList,
    NotAnEigenvector,
    NotCentrosymmetric,
    NotEigenvectors,
    PerronVectorNotSymmetric,
    PreconditionError,
    RankDeficientX,
    ZeroPerronComponent,
)
from .spectra import SpectrumList, classify, Kind

COEFF_CLIP = 1e-12


class PerronData(NamedTuple):
    value: float
    vector: np.ndarray
    symmetric: bool


class RowSumForm(NamedTuple):
    matrix: np.ndarray
    alpha: float


def _square(M, name="M") -> np.ndarray:
    M = np.array(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got {M.shape}")
    return M


def _scale(M) -> float:
    return max(1.0, float(np.abs(M).sum(axis=1).max())) if np.size(M) else 1.0


def brauer_update(M, v, q, tol: float = 1e-9) -> np.ndarray:
    """Return ``M + v q'``; the eigenvalue of ``v`` moves by ``v'q``."""
    M = _square(M)
    v = np.asarray(v, dtype=float).reshape(-1)
    q = np.asarray(q, dtype=float).reshape(-1)
    n = M.shape[0]
    if v.shape != (n,) or q.shape != (n,):
        raise DimensionMismatch("v and q must have the order of M")
    vv = float(v @ v)
    if vv == 0.0:
        raise NotAnEigenvector("zero vector")
    Mv = M @ v
    lam = float(v @ Mv) / vv
    res = float(np.abs(Mv - lam * v).max())
    if res > tol * _scale(M) * float(np.abs(v).max()):
        raise NotAnEigenvector(f"eigen-residual {res:.3e}")
    return M + np.outer(v, q)


def rado_omega(M, X, tol: float = 1e-9) -> np.ndarray:
    """The r x r matrix Omega with ``M X = X Omega``."""
    M = _square(M)
    X = np.atleast_2d(np.asarray(X, dtype=float))
    if X.shape[0] != M.shape[0]:
        X = X.T if X.shape[1] == M.shape[0] else X
    if X.shape[0] != M.shape[0]:
        raise DimensionMismatch(f"X has shape {X.shape} for order {M.shape[0]}")
    r = X.shape[1]
    if np.linalg.matrix_rank(X) < r:
        raise RankDeficientX(f"rank of X below {r}")
    MX = M @ X
    omega = np.linalg.lstsq(X, MX, rcond=None)[0]
    res = float(np.abs(MX - X @ omega).max())
    if res > tol * _scale(M) * max(1.0, float(np.abs(X).max())):
        raise NotEigenvectors(f"M X - X Omega residual {res:.3e}")
    return omega


def rado_update(M, X, Cmat, tol: float = 1e-9) -> np.ndarray:
    """Return ``M + X Cmat``.

    The spectrum becomes that of ``Omega + Cmat X`` together with the
    eigenvalues of M not carried by the columns of X.
    """
    M = _square(M)
    X = np.atleast_2d(np.asarray(X, dtype=float))
    Cmat = np.atleast_2d(np.asarray(Cmat, dtype=float))
    rado_omega(M, X, tol)
    if Cmat.shape != (X.shape[1], M.shape[0]):
        raise DimensionMismatch(f"Cmat has shape {Cmat.shape}, expected {(X.shape[1], M.shape[0])}")
    return M + X @ Cmat


def _symmetrize(v: np.ndarray) -> np.ndarray:
    # exact palindrome: (a + b) / 2 == (b + a) / 2 bitwise
    return 0.5 * (v + v[::-1])


def perron_vector(M, tol: float = 1e-12) -> PerronData:
    """Perron value and vector of a nonnegative matrix by shifted power iteration."""
    M = _square(M)
    if np.size(M) == 0:
        raise DimensionMismatch("empty matrix")
    if M.min() < 0:
        raise PreconditionError("matrix has negative entries")
    n = M.shape[0]
    delta = float(np.diag(M).max()) + 1.0
    S = M + delta * np.eye(n)
    centro = is_centrosymmetric(M) == 0.0
    v = np.ones(n)
    cap = 100 * n * n
    scale = _scale(M)
    for _ in range(cap):
        w = S @ v
        w /= w.max()
        if centro:
            w = _symmetrize(w)
        step = float(np.abs(w - v).max())
        v = w
        if step < tol:
            break
        Mv = M @ v
        lam = float(v @ Mv) / float(v @ v)
        if float(np.abs(Mv - lam * v).max()) < tol * scale:
            break
    else:
        raise ConvergenceFailure(f"power iteration did not settle in {cap} steps")
    Mv = M @ v
    value = float(v @ Mv) / float(v @ v)
    if float(np.abs(Mv - value * v).max()) > 1e-9 * max(value, 1.0):
        raise ConvergenceFailure("power iterate is not an eigenvector")
    v = np.maximum(v, 0.0)
    v /= v.max()
    sym = float(np.abs(v - v[::-1]).max()) <= 1e-10 * float(v.max())
    return PerronData(value, v, sym)


def perron_bump(C, eps: float, vector=None) -> np.ndarray:
    """Raise the Perron value of a nonnegative centrosymmetric C by ``eps``.

    Uses ``C + eps / (v'v) v v'`` with a symmetric Perron vector v, so the
    result stays exactly centrosymmetric and no entry decreases.
    """
    C = _square(C, "C")
    if eps < 0:
        raise PreconditionError("eps must be nonnegative")
    if is_centrosymmetric(C) != 0.0:
        raise NotCentrosymmetric("perron_bump needs an exactly centrosymmetric matrix")
    if eps == 0:
        return C.copy()
    if vector is None:
        vector = perron_vector(C).vector
    v = np.asarray(vector, dtype=float).reshape(-1)
    if v.shape != (C.shape[0],) or v.min() < 0:
        raise DimensionMismatch("Perron vector has wrong shape or sign")
    if float(np.abs(v - v[::-1]).max()) > 1e-10 * float(v.max()):
        v = _symmetrize(v)
        Cv = C @ v
        lam = float(v @ Cv) / float(v @ v)
        if float(np.abs(Cv - lam * v).max()) > 1e-8 * _scale(C) * float(v.max()):
            raise PerronVectorNotSymmetric("no symmetric Perron vector found")
    else:
        v = _symmetrize(v)
    return C + (eps / float(v @ v)) * np.outer(v, v)


def _monic_from_roots(spectrum: SpectrumList) -> np.ndarray:
    """Real monic polynomial coefficients, highest degree first."""
    p = np.array([1.0])
    for r in spectrum.reals:
        p = np.convolve(p, [1.0, -r])
    for z in spectrum.pairs:
        p = np.convolve(p, [1.0, -2.0 * z.real, z.real ** 2 + z.imag ** 2])
    return p


def _zero_sum_check(spectrum: SpectrumList):
    total = spectrum.total()
    scale = 1.0 + sum(abs(z) for z in spectrum.values)
    if abs(total) > 1e-10 * scale:
        raise PreconditionError(f"list must sum to zero, sums to {total:.3e}")


def companion_coefficients(spectrum: SpectrumList) -> np.ndarray:
    """``c_0 .. c_{n-1}`` of ``x^n + sum c_i x^i``, tiny positives clipped."""
    p = _monic_from_roots(spectrum)
    n = len(p) - 1
    c = p[::-1][:n].copy()
    if n:
        c[n - 1] = 0.0
    scale = float(np.abs(p).max())
    c[(c > 0) & (c <= COEFF_CLIP * scale)] = 0.0
    return c


def companion_realize(spectrum: SpectrumList) -> np.ndarray:
    """Companion matrix of a zero-sum list, required to be nonnegative.

    Layout: ones on the subdiagonal and ``-c_i`` in the last column.  It is
    nonnegative exactly when every coefficient is nonpositive.
    """
    _zero_sum_check(spectrum)
    c = companion_coefficients(spectrum)
    if np.any(c > 0):
        raise CompanionNotNonnegative(f"positive coefficients at degrees {np.nonzero(c > 0)[0].tolist()}")
    n = len(c)
    C = np.zeros((n, n))
    if n > 1:
        C[np.arange(1, n), np.arange(n - 1)] = 1.0
    C[:, n - 1] = -c
    C[n - 1, n - 1] = 0.0
    return C


def companion_perron_vector(coeffs, beta: float) -> np.ndarray:
    """Right eigenvector of the companion for its root ``beta``.

    ``v_k = -sum_{j<=k} c_j beta^(j-k-1)`` is a sum of nonnegative terms when
    all ``c_j <= 0``, so it is computed without cancellation.
    """
    c = np.asarray(coeffs, dtype=float)
    n = len(c)
    v = np.empty(n)
    acc = 0.0
    for k in range(n):
        acc = (acc - c[k]) / beta
        v[k] = acc
    v[n - 1] = 1.0
    return v


def to_row_sum_form(M, vector=None) -> RowSumForm:
    """Diagonal similarity ``D^-1 M D`` with D the Perron vector."""
    M = _square(M)
    if vector is None:
        pd = perron_vector(M)
        v, alpha = pd.vector, pd.value
    else:
        v = np.asarray(vector, dtype=float).reshape(-1)
        alpha = float(v @ (M @ v)) / float(v @ v)
    if v.min() <= 0:
        raise ZeroPerronComponent("Perron vector has a zero component")
    out = M * v[None, :] / v[:, None]
    np.fill_diagonal(out, np.diag(M))
    return RowSumForm(out, alpha)


def _pair_block(z: complex) -> tuple[np.ndarray, np.ndarray]:
    """3x3 zero-diagonal block in CS_{-2a} for ``{-2a, z, conj z}`` and its left Perron vector."""
    beta = -2.0 * z.real
    lst = SpectrumList([complex(beta, 0.0), z, z.conjugate()])
    comp = companion_realize(lst)
    v = companion_perron_vector(companion_coefficients(lst), beta)
    # the companion's left Perron vector is (1, beta, beta^2); D^-1 C D maps it to y * v
    w = beta ** np.arange(3) * v
    return to_row_sum_form(comp, v).matrix, w / w.sum()


def _unit_block(unit) -> tuple[np.ndarray, float, np.ndarray]:
    """Block, row sum and normalized left Perron vector for one real or one pair."""
    if unit is None:
        return np.zeros((1, 1)), 0.0, np.ones(1)
    if isinstance(unit, complex):
        B, w = _pair_block(unit)
        return B, -2.0 * unit.real, w
    t = abs(unit)
    return np.array([[0.0, t], [t, 0.0]]), t, np.full(2, 0.5)


def _zero_sum_cs(tail: Sequence[complex]) -> np.ndarray:
    """Nonnegative zero-diagonal matrix in CS_beta, spectrum ``{beta} + tail``.

    ``beta = -sum(tail)``.  Each real value or conjugate pair in ``tail``
    gets its own small block (a 2x2 swap or a 3x3 companion).  About half of
    the values are kept for a glue matrix G with spectrum ``{beta} + glue``
    and diagonal equal to the block row sums, built recursively.  Column j of
    G is spread over block j along that block's left Perron vector, which
    keeps every block eigenvector, so repeated or clustered values never meet
    inside one companion matrix.
    """
    tail = [complex(z) for z in tail]
    n = len(tail) + 1
    if all(z == 0 for z in tail):
        return np.zeros((n, n))
    units: list = [z.real for z in tail if z.imag == 0]
    units += [z for z in tail if z.imag > 0]
    units.sort(key=lambda u: (-complex(u).real, complex(u).imag))
    chunks: list = []
    glue: list[complex] = []
    for u in units:
        if len(chunks) <= len(glue):
            chunks.append(u)
        elif isinstance(u, complex):
            glue += [u, u.conjugate()]
        else:
            glue.append(complex(u, 0.0))
    chunks += [None] * (len(glue) + 1 - len(chunks))
    if len(chunks) == 1:
        return _unit_block(chunks[0])[0]
    parts = [_unit_block(u) for u in chunks]
    betas = np.array([p[1] for p in parts])
    head = -sum(z.real for z in tail)
    G = realize_with_diagonal([complex(head, 0.0)] + glue, betas)
    W = G - np.diag(betas)
    np.fill_diagonal(W, 0.0)
    sizes = [p[0].shape[0] for p in parts]
    offs = np.concatenate([[0], np.cumsum(sizes)])
    out = np.zeros((n, n))
    for i, (Bi, _, _) in enumerate(parts):
        rows = slice(offs[i], offs[i + 1])
        out[rows, rows] = Bi
        for j, (_, _, wj) in enumerate(parts):
            if j != i:
                out[rows, offs[j]:offs[j + 1]] = W[i, j] * wj[None, :]
    return out


def realize_with_diagonal(spectrum, diag: Sequence[float]) -> np.ndarray:
    """Nonnegative matrix with a Suleimanova-type spectrum and given diagonal.

    The head is lowered to ``-sum(tail)``, realized with zero diagonal and
    constant row sums, and then ``e omega'`` is added.
    """
    if not isinstance(spectrum, SpectrumList):
        spectrum = SpectrumList(spectrum)
    omega = np.asarray(diag, dtype=float).reshape(-1)
    n = spectrum.n
    if omega.shape != (n,):
        raise DimensionMismatch(f"{omega.size} diagonal entries for a list of {n}")
    if np.any(omega < 0):
        raise NegativeEntryInList("diagonal entries must be nonnegative")
    total = spectrum.total()
    scale = 1.0 + sum(abs(z) for z in spectrum.values)
    if abs(float(omega.sum()) - total) > 1e-9 * scale:
        raise DiagonalSumMismatch(f"diagonal sums to {omega.sum():.12g}, list to {total:.12g}")
    if classify(spectrum).kind is Kind.NOT_SULEIMANOVA:
        raise PreconditionError("list is not of Suleimanova type")
    tail = spectrum.tail()
    beta = -sum(z.real for z in tail)
    if spectrum.perron < beta - 1e-12 * scale:
        raise PreconditionError("head is below minus the tail sum")
    B = _zero_sum_cs(tail)
    return B + omega[None, :]
