import pytest
from hypothesis import given, settings, strategies as st

from centroniep.errors import NoRealCentroSplit, NotConjugateClosed, ObstructedList, PreconditionError
from centroniep.fixtures import EXAMPLE1_SPECTRUM
from centroniep.spectra import (
    Kind,
    SpectrumList,
    classify,
    in_region_f,
    is_obstructed,
    multiset_union,
    parse_complex,
    split_for_real_centro,
    split_suleimanova,
)


def as_multiset(values):
    return sorted((round(z.real, 9), round(z.imag, 9)) for z in values)


def test_parse_forms():
    assert parse_complex("-2+2i") == complex(-2, 2)
    assert parse_complex([1, -0.5]) == complex(1, -0.5)
    assert parse_complex(3) == 3
    with pytest.raises(PreconditionError):
        parse_complex("two")


def test_snapping_and_conjugate_closure():
    s = SpectrumList([1 + 1e-14j, 2 + 3j, 2 - 3j + 1e-13])
    assert s.values[0] == 1
    assert s.values[2] == s.values[1].conjugate()
    assert s.r_real == 1 and s.m_pairs == 1
    with pytest.raises(NotConjugateClosed):
        SpectrumList([1, 2 + 1j])


def test_classify_examples():
    assert classify(SpectrumList(EXAMPLE1_SPECTRUM)).kind is Kind.COMPLEX_SULEIMANOVA
    assert classify(SpectrumList([6, -1, -2, -3])).kind is Kind.REAL_SULEIMANOVA
    assert classify(SpectrumList([10, 3, 1 + 1j, 1 - 1j])).kind is Kind.NOT_SULEIMANOVA
    # a pair outside the region
    assert classify(SpectrumList([5, -1 + 2j, -1 - 2j])).kind is Kind.NOT_SULEIMANOVA
    assert in_region_f(complex(-2, 2)) and not in_region_f(complex(-1, 2))


def test_obstruction_predicate():
    assert is_obstructed(SpectrumList([4, -2 + 2j, -2 - 2j]))
    assert not is_obstructed(SpectrumList([4, 1, -2 + 2j, -2 - 2j]))
    assert not is_obstructed(SpectrumList(EXAMPLE1_SPECTRUM))


def test_suleimanova_split_of_worked_example():
    part = split_suleimanova(SpectrumList(EXAMPLE1_SPECTRUM))
    l1, l2 = part.sublists
    assert part.head == 18
    assert as_multiset(l1.values) == as_multiset([18, -1, -2, -2 + 2j, -2 - 2j])
    assert as_multiset(l2.values) == as_multiset([-3, -3 + 1j, -3 - 1j, -1 + 1j, -1 - 1j])
    assert l1.values[0] == 18


def test_suleimanova_split_rejects_obstructed():
    with pytest.raises(ObstructedList):
        split_suleimanova(SpectrumList([4, -2 + 2j, -2 - 2j]))


def test_real_centro_split_impossible_case():
    with pytest.raises(NoRealCentroSplit):
        split_for_real_centro(SpectrumList([1 + 1j, 1 - 1j]))


pair = st.builds(lambda a, b: complex(-a, b * a), st.floats(0.1, 5), st.floats(0.05, 1))


@st.composite
def suleimanova_lists(draw):
    pairs = draw(st.lists(pair, max_size=4))
    reals = draw(st.lists(st.floats(-5, 0), max_size=5))
    if len(reals) == 0 and len(pairs) % 2 == 1:
        reals = [-1.0]
    tail = reals + [w for z in pairs for w in (z, z.conjugate())]
    head = -sum(z.real for z in tail) + draw(st.floats(0, 3))
    head = max(head, max((abs(z) for z in tail), default=0.0))
    return SpectrumList([head] + tail)


@settings(max_examples=150, deadline=None)
@given(suleimanova_lists())
def test_suleimanova_split_sizes_and_union(lst):
    part = split_suleimanova(lst)
    l1, l2 = part.sublists
    n = lst.n
    assert l1.n == (n + 1) // 2 and l2.n == n // 2
    # the rebalanced source sums to zero and is exactly the union of the halves
    assert abs(part.source.total()) < 1e-9 * (1 + sum(abs(z) for z in lst.values))
    assert as_multiset(multiset_union(part.sublists)) == as_multiset(part.source.values)
    assert l2.total() <= 1e-12


@settings(max_examples=150, deadline=None)
@given(st.lists(st.floats(-5, 5), max_size=6), st.lists(st.complex_numbers(max_magnitude=5), max_size=3))
def test_real_centro_split_sizes(reals, zs):
    pairs = [complex(z.real, abs(z.imag) + 0.1) for z in zs]
    lst = SpectrumList(reals + [w for z in pairs for w in (z, z.conjugate())])
    if lst.n == 0:
        return
    try:
        part = split_for_real_centro(lst)
    except NoRealCentroSplit:
        assert lst.n % 2 == 0 and lst.r_real == 0 and lst.m_pairs % 2 == 1
        return
    l1, l2 = part.sublists
    assert l1.n == (lst.n + 1) // 2 and l2.n == lst.n // 2
    assert as_multiset(multiset_union(part.sublists)) == as_multiset(lst.values)
