"""Random instance generators shared by the test modules."""

import numpy as np

from centroniep.centro import assemble_even, assemble_odd


def region_f_pair(rng, scale=3.0):
    """a + ib with a < 0, 0 < b <= |a|."""
    a = -rng.uniform(0.1, scale)
    b = rng.uniform(0.05, 1.0) * abs(a)
    return complex(a, b)


def conj_pairs(zs):
    out = []
    for z in zs:
        out += [z, z.conjugate()]
    return out


def nonneg_descending(rng, n, hi=10.0):
    return sorted(rng.uniform(0.0, hi, n).tolist(), reverse=True)


def random_centro(rng, n, nonneg=False):
    m = n // 2
    draw = (lambda *s: rng.uniform(0.0, 1.0, s)) if nonneg else (lambda *s: rng.normal(size=s))
    A, B = draw(m, m), draw(m, m)
    if n % 2 == 0:
        return assemble_even(A, B)
    return assemble_odd(A, B, draw(m), draw(m), float(draw(1)[0]))


def separated_roots(rng, degree, min_gap=0.3, radius=2.0):
    """Real roots and upper-half-plane pairs, pairwise at least ``min_gap`` apart."""
    while True:
        roots = []
        while len(roots) < degree:
            if degree - len(roots) >= 2 and rng.random() < 0.5:
                z = complex(rng.uniform(-radius, radius), rng.uniform(0.2, radius))
                roots += [z, z.conjugate()]
            else:
                roots.append(complex(rng.uniform(-radius, radius), 0.0))
        arr = np.array(roots)
        d = np.abs(arr[:, None] - arr[None, :]) + np.eye(len(arr)) * 1e9
        if d.min() >= min_gap:
            return roots


def companion_of(roots):
    p = np.real(np.poly(roots))
    n = len(p) - 1
    C = np.zeros((n, n))
    C[np.arange(1, n), np.arange(n - 1)] = 1.0
    C[:, n - 1] = -p[::-1][:n]
    return C


def well_spaced_diagonalizable(rng, n):
    """``V diag(lam) V^-1`` with real eigenvalues at least 0.6 apart."""
    lam = rng.permutation(np.arange(n, dtype=float)) + rng.uniform(-0.2, 0.2, n)
    V = rng.normal(size=(n, n)) + 2.0 * np.eye(n)
    M = V @ np.diag(lam) @ np.linalg.inv(V)
    return M, lam, V
