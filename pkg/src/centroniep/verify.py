"""Independent spectral oracle.

Eigenvalues come from an in-repo dense solver (Parlett-Reinsch balancing,
Gaussian-elimination Hessenberg reduction, Francis double-shift QR) so that no
construction is checked by the routine that produced it.  Computed spectra are
compared with targets through an optimal bottleneck assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .centro import is_centrosymmetric, is_nonnegative
from .errors import CardinalityMismatch, ConvergenceFailure, DimensionMismatch

EPS = np.finfo(float).eps
RADIX = 2.0
MAX_ITS = 60


def balance(a: np.ndarray) -> np.ndarray:
    """Diagonal similarity making row and column norms comparable (in place)."""
    n = a.shape[0]
    sqrdx = RADIX * RADIX
    done = False
    while not done:
        done = True
        for i in range(n):
            c = np.abs(a[:, i]).sum() - abs(a[i, i])
            r = np.abs(a[i, :]).sum() - abs(a[i, i])
            if c == 0.0 or r == 0.0:
                continue
            g = r / RADIX
            f = 1.0
            s = c + r
            while c < g:
                f *= RADIX
                c *= sqrdx
            g = r * RADIX
            while c > g:
                f /= RADIX
                c /= sqrdx
            if (c + r) / f < 0.95 * s:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Upper Hessenberg form by stabilized elementary similarities (in place)."""
    n = a.shape[0]
    for m in range(1, n - 1):
        col = a[m:, m - 1]
        i = m + int(np.argmax(np.abs(col)))
        x = a[i, m - 1]
        if i != m:
            a[[i, m], m - 1:] = a[[m, i], m - 1:]
            a[:, [i, m]] = a[:, [m, i]]
        if x != 0.0:
            y = a[m + 1:, m - 1] / x
            if np.any(y):
                a[m + 1:, m:] -= np.outer(y, a[m, m:])
                a[:, m] += a[:, m + 1:] @ y
        a[m + 1:, m - 1] = 0.0
    return a


def hqr(a: np.ndarray) -> np.ndarray:
    """Eigenvalues of an upper Hessenberg matrix (destroys ``a``)."""
    n = a.shape[0]
    wr = np.zeros(n)
    wi = np.zeros(n)
    anorm = sum(np.abs(a[i, max(i - 1, 0):]).sum() for i in range(n))
    nn = n - 1
    t = 0.0
    while nn >= 0:
        its = 0
        while True:
            l = 0
            for ll in range(nn, 0, -1):
                s = abs(a[ll - 1, ll - 1]) + abs(a[ll, ll])
                if s == 0.0:
                    s = anorm
                if abs(a[ll, ll - 1]) <= EPS * s:
                    a[ll, ll - 1] = 0.0
                    l = ll
                    break
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = np.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + np.copysign(z, p)
                    wr[nn - 1] = wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = wi[nn] = 0.0
                else:
                    wr[nn - 1] = wr[nn] = x + p
                    wi[nn - 1] = z
                    wi[nn] = -z
                nn -= 2
                break
            if its == MAX_ITS:
                raise ConvergenceFailure("QR iteration did not converge")
            if its and its % 10 == 0:
                # exceptional shift
                t += x
                a[np.arange(nn + 1), np.arange(nn + 1)] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1
            m = nn - 2
            while m >= l:
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u <= EPS * v:
                    break
                m -= 1
            for i in range(m, nn - 1):
                a[i + 2, i] = 0.0
                if i != m:
                    a[i + 2, i - 1] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = a[k + 2, k - 1] if k + 1 != nn else 0.0
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = np.copysign(np.sqrt(p * p + q * q + r * r), p)
                if s == 0.0:
                    continue
                if k == m:
                    if l != m:
                        a[k, k - 1] = -a[k, k - 1]
                else:
                    a[k, k - 1] = -s * x
                p += s
                x = p / s
                y = q / s
                z = r / s
                q /= p
                r /= p
                # row operation on rows k..k+2, columns k..nn
                if k + 1 != nn:
                    pr = a[k, k:nn + 1] + q * a[k + 1, k:nn + 1] + r * a[k + 2, k:nn + 1]
                    a[k + 2, k:nn + 1] -= pr * z
                else:
                    pr = a[k, k:nn + 1] + q * a[k + 1, k:nn + 1]
                a[k + 1, k:nn + 1] -= pr * y
                a[k, k:nn + 1] -= pr * x
                # column operation on columns k..k+2, rows l..min(nn, k+3)
                top = min(nn, k + 3) + 1
                if k + 1 != nn:
                    pc = x * a[l:top, k] + y * a[l:top, k + 1] + z * a[l:top, k + 2]
                    a[l:top, k + 2] -= pc * r
                else:
                    pc = x * a[l:top, k] + y * a[l:top, k + 1]
                a[l:top, k + 1] -= pc * q
                a[l:top, k] -= pc
            if l >= nn - 1:
                break
    return wr + 1j * wi


def eigenvalues(M) -> np.ndarray:
    """All eigenvalues of a real square matrix, as a complex array."""
    a = np.array(M, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise DimensionMismatch(f"need a non-empty square matrix, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DimensionMismatch("matrix has non-finite entries")
    if a.shape[0] == 1:
        return np.array([complex(a[0, 0])])
    balance(a)
    hessenberg(a)
    return hqr(a)


def default_tolerance(values) -> float:
    """1e-8 absolute up to modulus 100, else 1e-10 relative to the largest."""
    scale = max((abs(complex(v)) for v in values), default=0.0)
    return 1e-8 if scale <= 100.0 else 1e-10 * scale


@dataclass(frozen=True)
class SpectrumMatch:
    matched_pairs: tuple[tuple[complex, complex, float], ...]
    max_distance: float
    matched: bool
    tolerance: float


def _bottleneck(D: np.ndarray) -> np.ndarray:
    """Column assignment minimizing the largest cost, ties broken by total cost."""
    n = D.shape[0]
    levels = np.unique(D)
    lo, hi = 0, len(levels) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        graph = csr_matrix((D <= levels[mid]).astype(np.int8))
        if (maximum_bipartite_matching(graph, perm_type="column") >= 0).all():
            hi = mid
        else:
            lo = mid + 1
    bound = levels[lo]
    cost = np.where(D <= bound, D, D.max() * (n + 1) + 1.0)
    rows, cols = linear_sum_assignment(cost)
    return cols[np.argsort(rows)]


def match_spectra(target, computed, tol: float | None = None) -> SpectrumMatch:
    target = [complex(z) for z in target]
    computed = [complex(z) for z in computed]
    if len(target) != len(computed):
        raise CardinalityMismatch(f"{len(target)} target vs {len(computed)} computed values")
    if tol is None:
        tol = default_tolerance(target)
    if not target:
        return SpectrumMatch((), 0.0, True, tol)
    T = np.array(target)
    C = np.array(computed)
    D = np.abs(T[:, None] - C[None, :])
    cols = _bottleneck(D)
    pairs = tuple((target[i], computed[j], float(D[i, j])) for i, j in enumerate(cols))
    worst = max(p[2] for p in pairs)
    return SpectrumMatch(pairs, worst, worst <= tol, tol)


def brute_force_bottleneck(target, computed) -> float:
    """Minimum over all bijections of the largest distance (small n only)."""
    T = [complex(z) for z in target]
    C = [complex(z) for z in computed]
    return min(max(abs(T[i] - C[j]) for i, j in enumerate(perm))
               for perm in itertools.permutations(range(len(C))))


@dataclass(frozen=True)
class RealizationReport:
    spectrum: SpectrumMatch
    centro_residual: float
    nonneg_margin: float
    provenance: str
    kind: str | None = None

    @property
    def matched(self) -> bool:
        return self.spectrum.matched

    @property
    def accepted(self) -> bool:
        """Spectrum matches, exactly centrosymmetric, and the kind predicate holds."""
        if not self.matched or self.centro_residual != 0.0:
            return False
        if self.kind == "NonnegCentro":
            return self.nonneg_margin >= 0.0
        if self.kind == "PositiveCentro":
            return self.nonneg_margin > 0.0
        return True


def verify_matrix(M, target, tol: float | None = None, provenance: str = "",
                  kind: str | None = None) -> RealizationReport:
    M = np.asarray(M, dtype=float)
    match = match_spectra(list(target), eigenvalues(M), tol)
    return RealizationReport(match, is_centrosymmetric(M), is_nonnegative(M), provenance, kind)


def verify_realization(realization, target, tol: float | None = None) -> RealizationReport:
    """Recompute every predicate from the raw matrix of a realization."""
    return verify_matrix(realization.matrix, target, tol, realization.provenance,
                         realization.kind.value)
