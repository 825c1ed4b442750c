"""End-to-end constructions of centrosymmetric matrices with a given spectrum.

Each public ``realize_*`` function implements one construction and returns a
:class:`Realization` whose report was recomputed from the raw matrix by the
independent oracle in :mod:`centroniep.verify`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .centro import (
    SQRT2,
    assemble_even,
    block_diag,
    flip,
    inverse_reduce,
    is_centrosymmetric,
    rotation_block,
)
from .errors import (
    CentroError,
    ConditionViolation,
    DimensionMismatch,
    MiddleBlockParityMismatch,
    NegativeEntryInList,
    NoApplicableConstruction,
    NotRealizable4x4,
    NotStrictlyComplex,
    ObstructedList,
    PartitionMismatch,
    PerronNotStrict,
    PreconditionError,
)
from .perturb import perron_bump, perron_vector, realize_with_diagonal, rado_update, to_row_sum_form
from .spectra import (
    Kind,
    Parity,
    Partition,
    SpectrumList,
    classify,
    is_obstructed,
    split_for_real_centro,
    split_suleimanova,
)
from .verify import RealizationReport, verify_matrix


class RealizationKind(enum.Enum):
    REAL_CENTRO = "RealCentro"
    NONNEG_CENTRO = "NonnegCentro"
    POSITIVE_CENTRO = "PositiveCentro"


@dataclass(frozen=True)
class Realization:
    matrix: np.ndarray
    kind: RealizationKind
    provenance: str
    partition: Partition | None = None
    report: RealizationReport | None = None

    @property
    def accepted(self) -> bool:
        return self.report is not None and self.report.accepted


def _as_list(spectrum) -> SpectrumList:
    return spectrum if isinstance(spectrum, SpectrumList) else SpectrumList(spectrum)


def _scale(spectrum: SpectrumList) -> float:
    return 1.0 + max((abs(z) for z in spectrum.values), default=0.0)


def _finish(matrix, kind, provenance, target, partition=None, tol=None) -> Realization:
    matrix = np.asarray(matrix, dtype=float)
    report = verify_matrix(matrix, target.values, tol, provenance, kind.value)
    return Realization(matrix, kind, provenance, partition, report)


def _direct_sum(reals: Sequence[float], pairs: Sequence[complex]) -> np.ndarray:
    return block_diag(*([np.array([[r]]) for r in reals] + [rotation_block(z) for z in pairs]))


# -- real centrosymmetric ---------------------------------------------------

def realize_real_centro(spectrum, tol=None) -> Realization:
    """Real (possibly signed) centrosymmetric matrix for any conjugate-closed list.

    Both reduced blocks are direct sums of scalars and rotation blocks.  Even
    order with no real entries and an odd number of pairs is impossible and
    raises ``NoRealCentroSplit``.
    """
    spectrum = _as_list(spectrum)
    part = split_for_real_centro(spectrum)
    first, second = part.sublists
    reals1 = list(first.reals)
    if spectrum.n % 2 == 1 and reals1:
        # the border entry c takes the smallest real of the first half
        reals1 = [reals1[-1]] + reals1[:-1]
    plus = _direct_sum(reals1, first.pairs)
    minus = _direct_sum(second.reals, second.pairs)
    C = inverse_reduce(plus, minus)
    return _finish(C, RealizationKind.REAL_CENTRO, "real-centro", spectrum, part, tol)


# -- nonnegative real lists -------------------------------------------------

def _descending_nonneg(spectrum: SpectrumList) -> list[float]:
    if spectrum.m_pairs:
        raise NegativeEntryInList("list has non-real entries")
    vals = list(spectrum.reals)
    if vals and vals[-1] < 0:
        raise NegativeEntryInList(f"negative entry {vals[-1]}")
    return vals


def realize_nonneg_real(spectrum, tol=None) -> Realization:
    """Diagonal reduced blocks: larger half in ``A+JB``, smaller in ``A-JB``."""
    spectrum = _as_list(spectrum)
    lam = _descending_nonneg(spectrum)
    n = len(lam)
    m = n // 2
    if n % 2 == 0:
        plus = np.diag(lam[:m])
    else:
        plus = np.diag([lam[m]] + lam[:m])
    minus = np.diag(lam[n - m:]) if m else np.zeros((0, 0))
    C = inverse_reduce(plus, minus)
    return _finish(C, RealizationKind.NONNEG_CENTRO, "nonneg-real", spectrum, None, tol)


def perfect_matrix(n: int) -> np.ndarray:
    """First row all ones; row i has ones up to column n-1-i, then -1, then zeros."""
    if n < 1:
        raise DimensionMismatch("order must be positive")
    P = np.zeros((n, n))
    P[0] = 1.0
    for i in range(1, n):
        P[i, : n - i] = 1.0
        P[i, n - i] = -1.0
    return P


def perfect_similarity(values: Sequence[float]) -> np.ndarray:
    """``P D P^-1`` with D the diagonal of ``values``."""
    values = np.asarray(values, dtype=float)
    P = perfect_matrix(len(values))
    return np.linalg.solve(P.T, (P * values[None, :]).T).T


def perfect_diagonal(values: Sequence[float]) -> np.ndarray:
    """Closed-form diagonal of ``P D P^-1`` for descending ``values``."""
    lam = np.asarray(values, dtype=float)
    m = len(lam)
    out = np.empty(m)
    for j in range(1, m + 1):
        k = m if j <= 2 else m - j + 2
        d = lam[0] / 2.0 ** (k - 1)
        for i in range(2, k + 1):
            d += lam[i - 1] / 2.0 ** (k - i + 1)
        out[j - 1] = d
    return out


def realize_positive(spectrum, tol=None) -> Realization:
    """Strictly positive centrosymmetric matrix for a nonnegative list with a simple head."""
    spectrum = _as_list(spectrum)
    lam = _descending_nonneg(spectrum)
    n = len(lam)
    if n == 1:
        if lam[0] <= 0:
            raise PerronNotStrict("a single zero value cannot give a positive matrix")
    elif lam[0] <= lam[1]:
        raise PerronNotStrict("largest value is not simple")
    m = n // 2
    if n % 2 == 0:
        plus = perfect_similarity(lam[:m])
    else:
        core = perfect_similarity(lam[: m + 1])
        order = [m] + list(range(m))
        plus = core[np.ix_(order, order)]
    minus = np.diag(lam[n - m:]) if m else np.zeros((0, 0))
    C = inverse_reduce(plus, minus)
    return _finish(C, RealizationKind.POSITIVE_CENTRO, "positive", spectrum, None, tol)


def check_obstruction(spectrum) -> bool:
    """True when the list has exactly one real entry and an odd number of pairs."""
    return is_obstructed(_as_list(spectrum))


# -- Suleimanova type -------------------------------------------------------

def _structural_perron(n: int) -> np.ndarray:
    if n % 2 == 0:
        return np.ones(n)
    v = np.ones(n)
    v[n // 2] = SQRT2
    return v


def _suleimanova_zero_sum(spectrum: SpectrumList) -> tuple[np.ndarray, Partition]:
    """Nonnegative centrosymmetric matrix for the list with its head lowered to -sum(tail).

    The result has zero diagonal and Perron vector ``e`` (even order) or
    ``[e; sqrt 2; e]`` (odd order).
    """
    part = split_suleimanova(spectrum)
    first, second = part.sublists
    minus = _direct_sum(second.reals, second.pairs)
    omega = -np.diag(minus) if minus.size else np.zeros(0)
    if spectrum.n % 2 == 1:
        omega = np.concatenate([[0.0], omega])
    omega = np.abs(omega)  # turns -0.0 into 0.0
    plus = realize_with_diagonal(first, omega)
    return inverse_reduce(plus, minus), part


def realize_suleimanova(spectrum, tol=None) -> Realization:
    """Split, realize the halves, reassemble and lift the Perron value by the list sum."""
    spectrum = _as_list(spectrum)
    if is_obstructed(spectrum):
        raise ObstructedList()
    tag = classify(spectrum)
    if tag.kind is Kind.NOT_SULEIMANOVA:
        raise PreconditionError("list is not of Suleimanova type")
    eps = spectrum.total()
    if eps < -1e-12 * _scale(spectrum) * spectrum.n:
        raise PreconditionError(f"list sum {eps:.6g} is negative")
    Cp, part = _suleimanova_zero_sum(spectrum)
    C = perron_bump(Cp, max(eps, 0.0), _structural_perron(spectrum.n))
    return _finish(C, RealizationKind.NONNEG_CENTRO, f"suleimanova[{tag.kind.value}]",
                   spectrum, part, tol)


def _palindrome(half: Sequence[float], mid: float | None = None) -> np.ndarray:
    half = [float(w) for w in half]
    return np.array(half + ([] if mid is None else [float(mid)]) + half[::-1])


def realize_centro_with_diagonal(spectrum, diagonal, tol=None) -> Realization:
    """Centrosymmetric nonnegative matrix with a Suleimanova-type spectrum and a palindromic diagonal.

    The zero-sum centrosymmetric matrix is moved to constant row sums by a
    symmetric diagonal similarity, then ``e omega'`` is added.
    """
    spectrum = _as_list(spectrum)
    omega = np.asarray(diagonal, dtype=float).reshape(-1)
    n = spectrum.n
    if omega.shape != (n,):
        raise DimensionMismatch(f"{omega.size} diagonal entries for a list of {n}")
    if np.any(omega != omega[::-1]):
        raise PreconditionError("diagonal of a centrosymmetric matrix must be palindromic")
    if np.any(omega < 0):
        raise NegativeEntryInList("diagonal entries must be nonnegative")
    if abs(omega.sum() - spectrum.total()) > 1e-9 * _scale(spectrum) * n:
        raise ConditionViolation("ii", "diagonal sum differs from the list sum")
    if is_obstructed(spectrum):
        raise ObstructedList()
    if classify(spectrum).kind is Kind.NOT_SULEIMANOVA:
        raise PreconditionError("list is not of Suleimanova type")
    Cp, part = _suleimanova_zero_sum(spectrum)
    Bp = to_row_sum_form(Cp, _structural_perron(n)).matrix
    C = Bp + omega[None, :]
    return _finish(C, RealizationKind.NONNEG_CENTRO, "centro-diagonal", spectrum, part, tol)


# -- 4x4 closed forms -------------------------------------------------------

def _four_reals(spectrum) -> list[float]:
    vals = [complex(z) for z in (spectrum.values if isinstance(spectrum, SpectrumList) else
                                 SpectrumList(spectrum).values)]
    if len(vals) != 4 or any(z.imag != 0 for z in vals):
        raise DimensionMismatch("expected four real values")
    return [z.real for z in vals]


def realize_4x4_real(spectrum, tol=None) -> Realization:
    """Any list of four reals with nonnegative sum and a dominant head."""
    spectrum = _as_list(spectrum)
    lam = sorted(_four_reals(spectrum), reverse=True)
    l1, l2, l3, l4 = lam
    eps = 1e-12 * _scale(spectrum)
    if sum(lam) < -eps or any(abs(x) > l1 + eps for x in lam):
        raise NotRealizable4x4("needs a nonnegative sum and a dominant largest value")
    if l4 >= 0:
        r = realize_nonneg_real(spectrum, tol)
        return Realization(r.matrix, r.kind, "4x4-real[case 1]", None, r.report)
    if l2 <= 0:
        r = realize_suleimanova(spectrum, tol)
        return Realization(r.matrix, r.kind, "4x4-real[case 2]", r.partition, r.report)
    if l3 >= 0:
        plus, minus, tag = np.diag([l1, l2]), np.diag([l4, l3]), "case 3"
    elif l2 + l3 >= 0:
        plus, minus, tag = np.diag([l1, l2]), np.diag([l4, l3]), "case 4"
    else:
        s = l1 + l2 + l3
        plus = np.array([[-l3, 1.0], [-(l1 + l3) * (l2 + l3), s]])
        minus = np.diag([l3, l4])
        tag = "case 4b"
    C = inverse_reduce(plus, minus)
    return _finish(C, RealizationKind.NONNEG_CENTRO, f"4x4-real[{tag}]", spectrum, None, tol)


def realize_one_negative(spectrum, tol=None) -> Realization:
    """Real list with exactly one negative value, any order."""
    spectrum = _as_list(spectrum)
    if spectrum.m_pairs:
        raise PreconditionError("list has non-real entries")
    lam = list(spectrum.reals)
    n = len(lam)
    if n < 2 or lam[-1] >= 0 or (n > 1 and lam[-2] < 0):
        raise PreconditionError("needs exactly one negative value")
    if lam[0] + lam[-1] < 0:
        raise PreconditionError("negative value dominates the head")
    m = n // 2
    if n % 2 == 0:
        plus = np.diag(lam[:m])
        minus = np.diag([lam[-1]] + lam[m:n - 1])
    else:
        plus = np.diag([lam[m]] + lam[:m])
        minus = np.diag([lam[-1]] + lam[m + 1:n - 1])
    C = inverse_reduce(plus, minus)
    return _finish(C, RealizationKind.NONNEG_CENTRO, "one-negative", spectrum, None, tol)


def _omega_pair(omega) -> tuple[float, float]:
    w = [float(x) for x in np.asarray(omega, dtype=float).reshape(-1)]
    if len(w) == 4:
        if w[0] != w[3] or w[1] != w[2]:
            raise PreconditionError("diagonal must read (w1, w2, w2, w1)")
        return w[0], w[1]
    if len(w) == 2:
        return w[0], w[1]
    raise DimensionMismatch("diagonal needs 2 or 4 entries")


def _clip(x: float, slack: float) -> float:
    # values that passed a condition check within its slack are rounded to 0
    return 0.0 if -slack <= x < 0.0 else x


def realize_4x4_diag_real(spectrum, omega, tol=None) -> Realization:
    """Real list ``(l1, l2, l3, l4)`` with diagonal ``(w1, w2, w2, w1)``.

    The list is used in the given order; ``l3`` and ``l4`` pair with ``w1``
    and ``w2`` in conditions iii and iv.
    """
    spectrum = _as_list(spectrum)
    l1, l2, l3, l4 = _four_reals(spectrum)
    w1, w2 = _omega_pair(omega)
    sc = _scale(spectrum)
    eps = 1e-12 * sc
    if not (-eps <= w1 <= l1 + eps and -eps <= w2 <= l1 + eps):
        raise ConditionViolation("i", "each w must lie in [0, l1]")
    if abs((w1 + w2) - 0.5 * (l1 + l2 + l3 + l4)) > 1e-9 * sc:
        raise ConditionViolation("ii", "w1 + w2 must equal half the list sum")
    if w1 < l3 - eps or w2 < l4 - eps:
        raise ConditionViolation("iii", "w1 >= l3 and w2 >= l4 required")
    X = (2 * w1 - l3) * (2 * w2 - l4) - l1 * l2
    if X < -eps * sc:
        raise ConditionViolation("iv", "(2w1 - l3)(2w2 - l4) >= l1 l2 required")
    X = _clip(X, eps * sc)
    A = np.array([[w1, 0.5], [0.5 * X, w2]])
    B = np.array([[0.5 * X, _clip(w2 - l4, eps)], [_clip(w1 - l3, eps), 0.5]])
    C = assemble_even(A, B)
    return _finish(C, RealizationKind.NONNEG_CENTRO, "4x4-diagonal-real", spectrum, None, tol)


def realize_4x4_diag_complex(spectrum, omega, tol=None) -> Realization:
    """List ``{l1, l2, a +/- ib}`` with diagonal ``(w1, w2, w2, w1)``."""
    spectrum = _as_list(spectrum)
    if spectrum.n != 4:
        raise DimensionMismatch("expected four values")
    if spectrum.m_pairs != 1:
        raise NotStrictlyComplex("expected two reals and one pair with b > 0")
    l1, l2 = spectrum.reals
    z = spectrum.pairs[0]
    a, b = z.real, z.imag
    if b <= 0:
        raise NotStrictlyComplex("imaginary part must be positive")
    w1, w2 = _omega_pair(omega)
    sc = _scale(spectrum)
    eps = 1e-12 * sc
    if l1 + l2 - 2 * abs(a) < -eps or l1 - l2 - 2 * b < -eps:
        raise ConditionViolation("pre", "l1 + l2 >= 2|a| and l1 - l2 >= 2b required")
    if not (-eps <= w1 <= l1 + eps and -eps <= w2 <= l1 + eps):
        raise ConditionViolation("i", "each w must lie in [0, l1]")
    if abs((w1 + w2) - 0.5 * (l1 + l2 + 2 * a)) > 1e-9 * sc:
        raise ConditionViolation("ii", "w1 + w2 must equal half the list sum")
    X = (2 * w1 - a) * (2 * w2 - a) - l1 * l2
    if X - b * b < -eps * sc:
        raise ConditionViolation("iii", "(2w1 - a)(2w2 - a) >= l1 l2 + b^2 required")
    if w1 < a - eps or w2 < a - eps:
        raise ConditionViolation("iv", "w1 >= a and w2 >= a required")
    A = np.array([[w1, 1.0], [_clip(0.5 * (X - b * b), eps * sc), w2]])
    B = np.array([[0.5 * (X + b * b), _clip(w2 - a, eps)], [_clip(w1 - a, eps), 0.0]])
    C = assemble_even(A, B)
    return _finish(C, RealizationKind.NONNEG_CENTRO, "4x4-diagonal-complex", spectrum, None, tol)


def realize_4x4_diag(spectrum, omega, tol=None) -> Realization:
    spectrum = _as_list(spectrum)
    if spectrum.m_pairs:
        return realize_4x4_diag_complex(spectrum, omega, tol)
    return realize_4x4_diag_real(spectrum, omega, tol)


# -- partitioned (rank-r perturbation) ---------------------------------------

def _multiset_key(values) -> Counter:
    return Counter((round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0) for z in values)


def _base_block(base: SpectrumList, omega_full: np.ndarray) -> np.ndarray:
    """Order-p0 centrosymmetric nonnegative matrix with spectrum ``base`` and diagonal ``omega_full``."""
    p0 = base.n
    try:
        if p0 == 1:
            if abs(base.values[0].real - omega_full[0]) > 1e-9 * _scale(base):
                raise ConditionViolation("ii", "single base value must equal its diagonal")
            return np.array([[omega_full[0]]])
        if p0 == 2:
            l1, l2 = sorted((z.real for z in base.values), reverse=True)
            if base.m_pairs or abs(2 * omega_full[0] - (l1 + l2)) > 1e-9 * _scale(base):
                raise ConditionViolation("ii", "order-2 base needs 2w = l1 + l2")
            t = 0.5 * (l1 - l2)
            w = omega_full[0]
            return np.array([[w, t], [t, w]])
        if p0 == 4:
            if base.m_pairs == 1:
                return realize_4x4_diag_complex(base, omega_full).matrix
            if base.m_pairs == 0:
                vals = sorted((z.real for z in base.values), reverse=True)
                return realize_4x4_diag_real(SpectrumList(vals), omega_full).matrix
        return realize_centro_with_diagonal(base, omega_full).matrix
    except ConditionViolation:
        raise
    except CentroError as exc:
        raise ConditionViolation("ii", str(exc)) from exc


def _group_block(group: SpectrumList, w: float, head: float) -> np.ndarray:
    """Nonnegative matrix in CS_w with spectrum ``{w} + group``."""
    if w < 0 or w > head + 1e-12 * (1 + head):
        raise ConditionViolation("i", f"anchor {w} outside [0, {head}]")
    if group.n == 0:
        return np.array([[w]])
    gamma = SpectrumList([complex(w, 0.0)] + list(group.values))
    d = gamma.total() / gamma.n
    if d < 0:
        raise ConditionViolation("i", f"anchor {w} is below minus the group sum")
    try:
        return realize_with_diagonal(gamma, np.full(gamma.n, d))
    except CentroError as exc:
        raise ConditionViolation("i", str(exc)) from exc


def realize_partitioned(spectrum, partition: Partition, B=None, blocks=None,
                        middle=None, tol=None) -> Realization:
    """Block-diagonal assembly with a rank-p0 correction.

    ``partition.sublists`` is ``(L0, L1, ..., Lh)`` for even ``p0 = |L0|`` and
    ``(L0, L1, ..., Lh, Lmid)`` for odd ``p0``; ``partition.anchors`` holds
    ``(w1, ..., wh[, wmid])``.  ``B`` (order p0, diagonal the palindrome of
    the anchors), the group blocks ``blocks`` (``A_k`` in CS_{w_k}) and the
    centrosymmetric middle block ``middle`` may be supplied; anything missing
    is constructed.
    """
    spectrum = _as_list(spectrum)
    lists = list(partition.sublists)
    base = lists[0]
    p0 = base.n
    h = p0 // 2
    odd = p0 % 2 == 1
    if p0 == 0:
        raise PartitionMismatch("base list is empty")
    if len(lists) != h + 1 + int(odd):
        raise MiddleBlockParityMismatch(
            f"base of order {p0} needs {h + int(odd)} groups, got {len(lists) - 1}")
    groups = lists[1:h + 1]
    mid_list = lists[h + 1] if odd else None
    anchors = [float(w) for w in partition.anchors]
    if len(anchors) != h + int(odd):
        raise PartitionMismatch(f"expected {h + int(odd)} anchors, got {len(anchors)}")

    union = list(base.values)
    for g in groups:
        union += list(g.values) * 2
    if mid_list is not None:
        union += list(mid_list.values)
    if _multiset_key(union) != _multiset_key(spectrum.values):
        raise PartitionMismatch("partition does not reproduce the list")
    head = spectrum.perron
    if head is None or not spectrum.has_perron_head():
        raise PreconditionError("list needs a dominant real head")
    if abs(base.perron - head) > 1e-12 * _scale(spectrum):
        raise PartitionMismatch("base list must contain the head")

    omega_full = _palindrome(anchors[:h], anchors[h] if odd else None)
    if B is None:
        Bm = _base_block(base, omega_full)
    else:
        Bm = np.asarray(B, dtype=float)
        if Bm.shape != (p0, p0):
            raise DimensionMismatch(f"B must be {p0}x{p0}")
        if np.any(np.diag(Bm) != omega_full) or is_centrosymmetric(Bm) != 0.0 or Bm.min() < 0:
            raise ConditionViolation("ii", "B must be centrosymmetric nonnegative with the anchor diagonal")

    if blocks is None:
        Ak = [_group_block(g, w, head) for g, w in zip(groups, anchors)]
    else:
        Ak = [np.atleast_2d(np.asarray(b, dtype=float)) for b in blocks]
        if len(Ak) != h:
            raise PartitionMismatch(f"expected {h} group blocks")
        for blk, w in zip(Ak, anchors):
            if blk.min() < 0 or np.abs(blk.sum(axis=1) - w).max() > 1e-9 * (1 + w):
                raise ConditionViolation("i", "group block must be nonnegative with row sums w")

    mats = list(Ak)
    mid_vec = None
    if odd:
        w_mid = anchors[h]
        if middle is not None:
            Am = np.atleast_2d(np.asarray(middle, dtype=float))
        elif mid_list.n == 0:
            Am = np.array([[w_mid]])
        else:
            gamma = SpectrumList([complex(w_mid, 0.0)] + list(mid_list.values))
            try:
                Am = auto_realize(gamma).matrix
            except CentroError as exc:
                raise ConditionViolation("i", f"middle list: {exc}") from exc
        if is_centrosymmetric(Am) != 0.0 or Am.min() < 0:
            raise ConditionViolation("i", "middle block must be centrosymmetric nonnegative")
        if Am.shape[0] == 1:
            mid_vec = np.ones(1)
        else:
            pd = perron_vector(Am)
            if abs(pd.value - w_mid) > 1e-8 * (1 + w_mid):
                raise ConditionViolation("i", "middle block Perron value differs from its anchor")
            mid_vec = pd.vector
        mats.append(Am)
    mats += [flip(b) for b in reversed(Ak)]
    A = block_diag(*mats)
    n = A.shape[0]
    if n != spectrum.n:
        raise PartitionMismatch("block sizes do not add up to the list size")

    sizes = [b.shape[0] for b in mats]
    offs = np.concatenate([[0], np.cumsum(sizes)])
    X = np.zeros((n, p0))
    for col in range(p0):
        X[offs[col]:offs[col + 1], col] = 1.0
    if odd:
        X[offs[h]:offs[h + 1], h] = mid_vec
    Om = np.diag(omega_full)
    BmO = Bm - Om

    even_middle = odd and sizes[h] % 2 == 0
    if even_middle:
        Xn = X / np.linalg.norm(X, axis=0)[None, :]
        rado_update(A, Xn, np.zeros((p0, n)))
        C = A + Xn @ BmO @ Xn.T
        C = 0.5 * (C + flip(C))
        case = "odd base, even middle"
    else:
        Cmat = np.zeros((p0, n))
        for k in range(h):
            Cmat[:, offs[k]] = BmO[:, k]
            Cmat[:, offs[p0 - k] - 1] = BmO[:, p0 - 1 - k]
        if odd:
            s = sizes[h]
            centre = mid_vec[s // 2]
            if centre > 1e-12 * mid_vec.max():
                Cmat[:, offs[h] + s // 2] = BmO[:, h] / centre
            else:
                Cmat[:, offs[h]:offs[h + 1]] = np.outer(BmO[:, h], mid_vec) / float(mid_vec @ mid_vec)
        C = rado_update(A, X, Cmat)
        if is_centrosymmetric(C) != 0.0:
            C = 0.5 * (C + flip(C))
        case = "odd base" if odd else "even base"
    part = Partition(tuple(lists), spectrum, tuple(anchors),
                     Parity.ODD_P0 if odd else Parity.EVEN_P0)
    return _finish(C, RealizationKind.NONNEG_CENTRO, f"partitioned[{case}]", spectrum, part, tol)


def heuristic_partitions(spectrum) -> list[Partition]:
    """Candidate partitions: repeated values become one group, the rest the base.

    The head and every value left without a twin form the base list; one copy
    of each doubled value goes to the first group.  Anchors are tried as an
    equal split of the base sum and with the first anchor at its lower bound.
    """
    spectrum = _as_list(spectrum)
    head = spectrum.perron
    if head is None:
        return []
    rest = list(spectrum.values)
    rest.remove(complex(head, 0.0))
    counts = _multiset_key(rest)
    half: list[complex] = []
    base: list[complex] = [complex(head, 0.0)]
    seen: Counter = Counter()
    for z in rest:
        key = (round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0)
        seen[key] += 1
        if seen[key] % 2 == 0:
            half.append(z)
        elif seen[key] == counts[key]:
            base.append(z)
    try:
        base_list = SpectrumList(base)
        group = SpectrumList(half)
    except CentroError:
        return []
    p0 = base_list.n
    h = p0 // 2
    if group.n == 0 or h == 0:
        return []
    odd = p0 % 2 == 1
    total = base_list.total()
    lists = (base_list, group) + tuple(SpectrumList([]) for _ in range(h - 1))
    if odd:
        lists += (SpectrumList([]),)
    lo = max(0.0, -group.total())
    cands = []
    equal = total / p0
    if equal >= lo:
        cands.append([equal] * (h + int(odd)))
    if p0 > 2:
        rest_w = (total - 2 * lo) / (p0 - 2)
        if rest_w >= 0:
            cands.append([lo] + [rest_w] * (h - 1 + int(odd)))
    out = []
    for ws in cands:
        out.append(Partition(lists, spectrum, tuple(ws), Parity.ODD_P0 if odd else Parity.EVEN_P0))
    return out


# -- dispatcher -------------------------------------------------------------

def _attempt(name: str, fn: Callable[[], Realization], attempts: list) -> Realization | None:
    try:
        r = fn()
    except ObstructedList:
        raise
    except CentroError as exc:
        attempts.append((name, f"{type(exc).__name__}: {exc}"))
        return None
    if not r.accepted:
        rep = r.report
        attempts.append((name, f"verification failed (distance {rep.spectrum.max_distance:.3e}, "
                               f"margin {rep.nonneg_margin:.3e})"))
        return None
    return r


def auto_realize(spectrum, diagonal=None, tol=None, allow_signed: bool = True) -> Realization:
    """Try the constructions in a fixed order and return the first verified one.

    With ``allow_signed`` the last resort is a real centrosymmetric matrix
    that may have negative entries (kind ``RealCentro``).
    """
    spectrum = _as_list(spectrum)
    if is_obstructed(spectrum):
        raise ObstructedList()
    attempts: list = []
    chain: list[tuple[str, Callable[[], Realization]]] = []
    if diagonal is not None:
        omega = np.asarray(diagonal, dtype=float)
        if spectrum.n == 4:
            chain.append(("4x4-diagonal", lambda: realize_4x4_diag(spectrum, omega, tol)))
        chain.append(("centro-diagonal", lambda: realize_centro_with_diagonal(spectrum, omega, tol)))
    else:
        nonneg = spectrum.m_pairs == 0 and (not spectrum.reals or spectrum.reals[-1] >= 0)
        if nonneg:
            strict = spectrum.n == 1 or spectrum.reals[0] > spectrum.reals[1]
            if strict:
                chain.append(("positive", lambda: realize_positive(spectrum, tol)))
            chain.append(("nonneg-real", lambda: realize_nonneg_real(spectrum, tol)))
        if classify(spectrum).kind is not Kind.NOT_SULEIMANOVA:
            chain.append(("suleimanova", lambda: realize_suleimanova(spectrum, tol)))
        if spectrum.m_pairs == 0 and spectrum.n >= 2:
            chain.append(("one-negative", lambda: realize_one_negative(spectrum, tol)))
        if spectrum.n == 4:
            if spectrum.m_pairs == 0:
                chain.append(("4x4-real", lambda: realize_4x4_real(spectrum, tol)))
            elif spectrum.m_pairs == 1:
                def four_complex():
                    l1, l2 = spectrum.reals
                    a = spectrum.pairs[0].real
                    w = 0.25 * (l1 + l2 + 2 * a)
                    return realize_4x4_diag_complex(spectrum, (w, w), tol)
                chain.append(("4x4-complex", four_complex))
        for i, part in enumerate(heuristic_partitions(spectrum)):
            chain.append((f"partitioned#{i + 1}",
                          lambda part=part: realize_partitioned(spectrum, part, tol=tol)))
    if allow_signed:
        chain.append(("real-centro", lambda: realize_real_centro(spectrum, tol)))
    for name, fn in chain:
        r = _attempt(name, fn, attempts)
        if r is not None:
            if r.kind is RealizationKind.REAL_CENTRO:
                r = Realization(r.matrix, r.kind, r.provenance + " (not nonnegative)",
                                r.partition, r.report)
            return r
    raise NoApplicableConstruction(attempts)
