"""Eigenvalue lists: normalization, classification and the two-way splits."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NoRealCentroSplit, NotConjugateClosed, ObstructedList, PreconditionError

REL_TOL = 1e-12


def _tol(z: complex) -> float:
    return REL_TOL * (1.0 + abs(z))


def parse_complex(token) -> complex:
    """Parse ``3``, ``-2+2i``, ``"1-i"`` or ``[re, im]`` into a complex."""
    if isinstance(token, (list, tuple)):
        if len(token) != 2:
            raise PreconditionError(f"expected [re, im], got {token!r}")
        return complex(float(token[0]), float(token[1]))
    if isinstance(token, (int, float, complex)):
        return complex(token)
    text = str(token).strip().replace(" ", "").replace("i", "j")
    if not text:
        raise PreconditionError("empty spectrum entry")
    try:
        return complex(text)
    except ValueError as exc:
        raise PreconditionError(f"cannot parse complex value {token!r}") from exc


def pair_key(z: complex):
    """Order used when distributing conjugate pairs over sublists."""
    return (-z.imag, -z.real)


@dataclass(frozen=True)
class SpectrumList:
    """A conjugate-closed multiset of complex numbers.

    Entries within ``1e-12 * (1 + |z|)`` of the real axis are snapped to it,
    and each conjugate partner is replaced by the exact conjugate of its
    upper-half-plane mate, so the stored multiset is conjugate-closed exactly.
    ``values`` keeps the caller's order.
    """

    values: tuple[complex, ...]
    reals: tuple[float, ...] = field(init=False, repr=False)
    pairs: tuple[complex, ...] = field(init=False, repr=False)

    def __init__(self, values: Iterable):
        vals = [parse_complex(v) for v in values]
        for z in vals:
            if not (abs(z.real) < float("inf") and abs(z.imag) < float("inf")) or z != z:
                raise PreconditionError(f"non-finite spectrum entry {z!r}")
        vals = [complex(z.real, 0.0) if abs(z.imag) <= _tol(z) else z for z in vals]

        upper = [i for i, z in enumerate(vals) if z.imag > 0]
        lower = [i for i, z in enumerate(vals) if z.imag < 0]
        if len(upper) != len(lower):
            raise NotConjugateClosed(f"{len(upper)} upper vs {len(lower)} lower entries")
        free = set(lower)
        for i in upper:
            z = vals[i]
            match = None
            for j in sorted(free):
                w = vals[j]
                if abs(z.imag + w.imag) <= _tol(z) and abs(z.real - w.real) <= _tol(z):
                    match = j
                    break
            if match is None:
                raise NotConjugateClosed(f"no conjugate partner for {z}")
            free.discard(match)
            vals[match] = z.conjugate()

        object.__setattr__(self, "values", tuple(vals))
        reals = sorted((z.real for z in vals if z.imag == 0), reverse=True)
        object.__setattr__(self, "reals", tuple(reals))
        pairs = sorted((z for z in vals if z.imag > 0), key=lambda z: (-z.real, -z.imag))
        object.__setattr__(self, "pairs", tuple(pairs))

    @classmethod
    def from_parts(cls, reals: Sequence[float] = (), pairs: Sequence[complex] = ()) -> "SpectrumList":
        vals: list[complex] = [complex(r) for r in reals]
        for z in pairs:
            z = complex(z)
            vals.extend([z, z.conjugate()])
        return cls(vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def r_real(self) -> int:
        return len(self.reals)

    @property
    def m_pairs(self) -> int:
        return len(self.pairs)

    @property
    def perron(self) -> float | None:
        """Largest real entry, or None when the list has no reals."""
        return self.reals[0] if self.reals else None

    def has_perron_head(self) -> bool:
        head = self.perron
        if head is None:
            return False
        return all(abs(z) <= head + _tol(z) for z in self.values)

    def total(self) -> float:
        return float(sum(z.real for z in self.values))

    def tail(self) -> list[complex]:
        """All entries except one copy of the Perron value."""
        head = self.perron
        out = list(self.values)
        if head is not None:
            out.remove(complex(head, 0.0))
        return out

    def sorted_values(self) -> list[complex]:
        """Reals descending, then each pair as z, conj(z)."""
        out = [complex(r, 0.0) for r in self.reals]
        for z in self.pairs:
            out.extend([z, z.conjugate()])
        return out


class Kind(enum.Enum):
    REAL_SULEIMANOVA = "RealSuleimanova"
    COMPLEX_SULEIMANOVA = "ComplexSuleimanova"
    NOT_SULEIMANOVA = "NotSuleimanova"


@dataclass(frozen=True)
class SuleimanovaTag:
    kind: Kind
    r_real: int
    m_pairs: int


class Parity(enum.Enum):
    EVEN_P0 = "EvenP0"
    ODD_P0 = "OddP0"


@dataclass(frozen=True)
class Partition:
    """A split of ``source`` into conjugate-closed sublists.

    Two-way splits carry ``sublists = (L1, L2)``.  Block partitions for the
    Rado assembly carry ``(L0, L1, ..., Lh[, Lmid])`` with one anchor per
    non-base sublist and a parity.  ``head`` is the replacement Perron value
    when the source list was rebalanced to zero sum.
    """

    sublists: tuple[SpectrumList, ...]
    source: SpectrumList
    anchors: tuple[float, ...] = ()
    parity: Parity | None = None
    head: float | None = None


def in_region_f(z: complex) -> bool:
    """Re z <= 0 and |Re z| >= |Im z| (with the snapping tolerance)."""
    t = _tol(z)
    return z.real <= t and abs(z.real) + t >= abs(z.imag)


def classify(spectrum: SpectrumList) -> SuleimanovaTag:
    r, m = spectrum.r_real, spectrum.m_pairs
    if not spectrum.has_perron_head():
        return SuleimanovaTag(Kind.NOT_SULEIMANOVA, r, m)
    if not all(in_region_f(z) for z in spectrum.tail()):
        return SuleimanovaTag(Kind.NOT_SULEIMANOVA, r, m)
    kind = Kind.REAL_SULEIMANOVA if m == 0 else Kind.COMPLEX_SULEIMANOVA
    return SuleimanovaTag(kind, r, m)


def is_obstructed(spectrum: SpectrumList) -> bool:
    return spectrum.r_real == 1 and spectrum.m_pairs % 2 == 1


def _build(reals: Sequence[float], pairs: Sequence[complex]) -> SpectrumList:
    return SpectrumList.from_parts(reals, pairs)


def split_for_real_centro(spectrum: SpectrumList) -> Partition:
    """Two conjugate-closed halves sized for the real centrosymmetric build.

    Even n gives halves of n/2; odd n gives ``ceil(n/2)`` and ``floor(n/2)``.
    Reals (descending) and pairs are dealt to the first half first.
    """
    n, r, m = spectrum.n, spectrum.r_real, spectrum.m_pairs
    reals = list(spectrum.reals)
    pairs = sorted(spectrum.pairs, key=pair_key)
    if n % 2 == 0:
        if m % 2 == 0:
            nr1, np1 = r // 2, m // 2
        else:
            if r < 2:
                raise NoRealCentroSplit(
                    "even order with no real entries and an odd number of pairs")
            nr1, np1 = (r + 2) // 2, m // 2
    else:
        if m % 2 == 0:
            nr1, np1 = (r + 1) // 2, m // 2
        else:
            nr1, np1 = (r - 1) // 2, (m + 1) // 2
    first = _build(reals[:nr1], pairs[:np1])
    second = _build(reals[nr1:], pairs[np1:])
    return Partition(sublists=(first, second), source=spectrum)


def split_suleimanova(spectrum: SpectrumList, tag: SuleimanovaTag | None = None) -> Partition:
    """Split a Suleimanova-type list after replacing its head by -sum(tail).

    The rebalanced list sums to zero; its head is stored in ``head`` and is
    always the first value of the first sublist.
    """
    if tag is None:
        tag = classify(spectrum)
    if tag.kind is Kind.NOT_SULEIMANOVA:
        raise PreconditionError("list is not of Suleimanova type")
    if is_obstructed(spectrum):
        raise ObstructedList()

    n, r, m = spectrum.n, spectrum.r_real, spectrum.m_pairs
    tail_reals = list(spectrum.reals[1:])
    pairs = sorted(spectrum.pairs, key=pair_key)
    head = -(sum(tail_reals) + 2.0 * sum(z.real for z in pairs))
    head = max(head, 0.0)

    if n % 2 == 0:
        if m % 2 == 0:
            nt1, np1 = r // 2 - 1, m // 2
        else:
            nt1, np1 = r // 2, m // 2
    else:
        if m % 2 == 0:
            nt1, np1 = (r - 1) // 2, m // 2
        else:
            nt1, np1 = (r + 1) // 2, m // 2

    first_vals = [complex(head, 0.0)] + [complex(x, 0.0) for x in tail_reals[:nt1]]
    for z in pairs[:np1]:
        first_vals.extend([z, z.conjugate()])
    first = SpectrumList(first_vals)
    second = _build(tail_reals[nt1:], pairs[np1:])
    rebalanced = SpectrumList([complex(head, 0.0)] + [complex(x, 0.0) for x in tail_reals]
                              + [w for z in pairs for w in (z, z.conjugate())])
    return Partition(sublists=(first, second), source=rebalanced, head=head)


def multiset_union(lists: Iterable[SpectrumList]) -> list[complex]:
    out: list[complex] = []
    for lst in lists:
        out.extend(lst.values)
    return out
