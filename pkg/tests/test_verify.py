import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from centroniep.errors import CardinalityMismatch, DimensionMismatch
from centroniep.fixtures import (
    EXAMPLE1_C,
    EXAMPLE1_C_PRIME,
    EXAMPLE1_SHIFTED,
    EXAMPLE1_SPECTRUM,
    EXAMPLE2_RESULT,
    EXAMPLE2_SPECTRUM,
)
from centroniep.verify import (
    brute_force_bottleneck,
    default_tolerance,
    eigenvalues,
    match_spectra,
    verify_matrix,
)

from helpers import well_spaced_diagonalizable


def test_trivial_eigenvalues():
    ev = eigenvalues(np.diag([3.0, 1.0, 2.0]))
    assert match_spectra([3, 2, 1], ev).max_distance < 1e-14
    ev = eigenvalues([[0, -1], [1, 0]])
    assert match_spectra([1j, -1j], ev).max_distance < 1e-14
    assert eigenvalues([[7.5]]).tolist() == [7.5]


def test_eigenvalues_of_printed_result():
    m = match_spectra(EXAMPLE2_SPECTRUM, eigenvalues(EXAMPLE2_RESULT), 1e-8)
    assert m.matched


def test_bad_input_is_rejected():
    with pytest.raises(DimensionMismatch):
        eigenvalues(np.zeros((2, 3)))
    with pytest.raises(DimensionMismatch):
        eigenvalues(np.zeros((0, 0)))
    with pytest.raises(DimensionMismatch):
        eigenvalues([[np.nan, 0], [0, 1]])


def test_match_examples():
    assert match_spectra([1, 2j, -2j], [-2j, 1, 2j]).max_distance == 0
    m = match_spectra([1 + 1e-10j, 1 - 1e-10j], [1, 1], 1e-8)
    assert m.matched and abs(m.max_distance - 1e-10) < 1e-20
    with pytest.raises(CardinalityMismatch):
        match_spectra([1, 2], [1])
    assert match_spectra([], []).matched


def test_near_swap_picks_the_min_max_pairing():
    # greedy nearest-first would pair 0 with 0.1 and leave 1 with -0.9 (distance 1.9)
    target = [0.0, 1.0]
    computed = [0.1, -0.9]
    m = match_spectra(target, computed)
    assert abs(m.max_distance - brute_force_bottleneck(target, computed)) < 1e-15
    assert abs(m.max_distance - 0.9) < 1e-15


def test_default_tolerance():
    assert default_tolerance([1, 100]) == 1e-8
    assert default_tolerance([1000, 1]) == pytest.approx(1e-7)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(0, 2**31 - 1))
def test_matcher_agrees_with_brute_force_and_is_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=n) + 1j * rng.normal(size=n)
    b = a + 0.5 * (rng.normal(size=n) + 1j * rng.normal(size=n))
    ab = match_spectra(a, b, 0.3)
    ba = match_spectra(b, a, 0.3)
    assert ab.max_distance == ba.max_distance and ab.matched == ba.matched
    assert abs(ab.max_distance - brute_force_bottleneck(a, b)) < 1e-14
    # the pairing is a bijection
    key = lambda z: (z.real, z.imag)
    assert sorted((p[1] for p in ab.matched_pairs), key=key) == sorted(map(complex, b), key=key)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**31 - 1))
def test_trace_equals_eigenvalue_sum(n, seed):
    rng = np.random.default_rng(seed)
    M = rng.normal(size=(n, n)) * rng.uniform(0.1, 50)
    ev = eigenvalues(M)
    tr = np.trace(M)
    assert abs(ev.sum() - tr) <= 1e-9 * (1 + abs(tr)) + 1e-12 * np.abs(M).sum()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.integers(0, 2**31 - 1))
def test_agrees_with_planted_spectrum(n, seed):
    rng = np.random.default_rng(seed)
    M, planted, _ = well_spaced_diagonalizable(rng, n)
    assert match_spectra(planted, eigenvalues(M), 1e-8).matched


def test_fixture_reports():
    cases = [(EXAMPLE1_C, EXAMPLE1_SPECTRUM), (EXAMPLE1_C_PRIME, EXAMPLE1_SHIFTED),
             (EXAMPLE2_RESULT, EXAMPLE2_SPECTRUM)]
    for M, target in cases:
        rep = verify_matrix(M, target, provenance="fixture", kind="NonnegCentro")
        assert rep.matched and rep.centro_residual == 0 and rep.nonneg_margin >= 0
        assert rep.accepted


def test_report_flags_failures():
    rep = verify_matrix([[1.0, 2.0], [3.0, 1.0]], [1 + 6**0.5, 1 - 6**0.5], kind="NonnegCentro")
    assert rep.matched and rep.centro_residual == 1.0 and not rep.accepted
    rep = verify_matrix([[0.0, 1.0], [1.0, 0.0]], [1, -1], kind="PositiveCentro")
    assert rep.matched and rep.nonneg_margin == 0 and not rep.accepted
    rep = verify_matrix([[0.0, 1.0], [1.0, 0.0]], [1, -1.1])
    assert not rep.matched and not rep.accepted
