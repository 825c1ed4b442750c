"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line."""

import time

import numpy as np
import pytest

from centroniep.centro import reduce
from centroniep.errors import ConditionViolation, ObstructedList
from centroniep.fixtures import (
    EXAMPLE1_C,
    EXAMPLE1_C_PRIME,
    EXAMPLE1_SHIFTED,
    EXAMPLE1_SPECTRUM,
    EXAMPLE2_ANCHORS,
    EXAMPLE2_BASE,
    EXAMPLE2_GROUP,
    EXAMPLE2_RESULT,
    EXAMPLE2_SPECTRUM,
)
from centroniep.perturb import brauer_update, perron_vector, rado_update
from centroniep.realize import (
    RealizationKind,
    auto_realize,
    perfect_diagonal,
    perfect_similarity,
    realize_4x4_diag_complex,
    realize_4x4_diag_real,
    realize_nonneg_real,
    realize_partitioned,
    realize_positive,
    realize_suleimanova,
)
from centroniep.spectra import Partition, SpectrumList
from centroniep.verify import brute_force_bottleneck, eigenvalues, match_spectra, verify_matrix

from helpers import (
    companion_of,
    conj_pairs,
    nonneg_descending,
    random_centro,
    region_f_pair,
    separated_roots,
    well_spaced_diagonalizable,
)


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail
    return emit


def test_criterion_1_printed_fixtures(report):
    t0 = time.perf_counter()
    d = []
    for M, target in [(EXAMPLE1_C, EXAMPLE1_SPECTRUM), (EXAMPLE1_C_PRIME, EXAMPLE1_SHIFTED),
                      (EXAMPLE2_RESULT, EXAMPLE2_SPECTRUM)]:
        d.append(match_spectra(target, eigenvalues(M), 1e-8).max_distance)
    elapsed = time.perf_counter() - t0
    ok = max(d) <= 1e-8 and elapsed < 1.0
    report(1, ok, f"printed matrices, max distance {max(d):.2e} (<= 1e-8), {elapsed:.3f}s (< 1s)")


def test_criterion_2_pipeline_reproduction(report):
    r1 = realize_suleimanova(EXAMPLE1_SPECTRUM)
    rep1 = verify_matrix(r1.matrix, EXAMPLE1_SPECTRUM, 1e-8)
    total = SpectrumList(EXAMPLE2_SPECTRUM)
    part = Partition((SpectrumList(EXAMPLE2_BASE), SpectrumList(EXAMPLE2_GROUP), SpectrumList([])),
                     total, EXAMPLE2_ANCHORS)
    r2 = realize_partitioned(total, part)
    rep2 = verify_matrix(r2.matrix, EXAMPLE2_SPECTRUM, 1e-8)
    ok = all(r.matched and r.centro_residual == 0.0 and r.nonneg_margin >= 0 for r in (rep1, rep2))
    report(2, ok, f"pipelines: distances {rep1.spectrum.max_distance:.2e}, {rep2.spectrum.max_distance:.2e}; "
                  f"residuals {rep1.centro_residual}, {rep2.centro_residual}; "
                  f"margins {rep1.nonneg_margin:.3g}, {rep2.nonneg_margin:.3g}")


def test_criterion_3_perfect_diagonal(report):
    rng = np.random.default_rng(3)
    worst_diag, worst_spec, min_margin = 0.0, 0.0, np.inf
    for _ in range(200):
        n = int(rng.integers(4, 11))
        lam = nonneg_descending(rng, n)
        lam[0] = lam[1] + rng.uniform(0.5, 5.0)
        worst_diag = max(worst_diag, np.abs(np.diag(perfect_similarity(lam)) - perfect_diagonal(lam)).max())
        r = realize_positive(lam, tol=1e-8)
        worst_spec = max(worst_spec, r.report.spectrum.max_distance)
        min_margin = min(min_margin, r.report.nonneg_margin)
        assert r.report.centro_residual == 0.0
    ok = worst_diag <= 1e-10 and worst_spec <= 1e-8 and min_margin > 0
    report(3, ok, f"perfect matrix: diagonal error {worst_diag:.2e} (<= 1e-10), "
                  f"spectrum {worst_spec:.2e} (<= 1e-8), min entry {min_margin:.3g} (> 0)")


def test_criterion_4_nonnegative_real_lists(report):
    rng = np.random.default_rng(4)
    worst, min_margin, max_res = 0.0, np.inf, 0.0
    for _ in range(500):
        n = int(rng.integers(1, 13))
        lam = nonneg_descending(rng, n)
        r = realize_nonneg_real(lam, tol=1e-10)
        worst = max(worst, r.report.spectrum.max_distance)
        min_margin = min(min_margin, r.report.nonneg_margin)
        max_res = max(max_res, r.report.centro_residual)
    ok = worst <= 1e-10 and min_margin >= 0 and max_res == 0.0
    report(4, ok, f"nonnegative reals: distance {worst:.2e} (<= 1e-10), margin {min_margin:.3g}, residual {max_res}")


def test_criterion_5_obstruction(report):
    rng = np.random.default_rng(5)
    obstructed = realized = 0
    for _ in range(100):
        m = 2 * int(rng.integers(0, 4)) + 1
        pairs = [region_f_pair(rng) for _ in range(m)]
        extra = -rng.uniform(0.0, 3.0)
        head = -2 * sum(z.real for z in pairs) - extra + rng.uniform(0.0, 2.0)
        head = max(head, max(abs(z) for z in pairs))
        base = [head] + conj_pairs(pairs)
        try:
            auto_realize(base)
        except ObstructedList:
            obstructed += 1
        lst = base + [extra]
        r = auto_realize(lst)
        if r.kind is RealizationKind.NONNEG_CENTRO and r.accepted and r.report.nonneg_margin >= 0:
            realized += 1
    ok = obstructed == 100 and realized == 100
    report(5, ok, f"obstruction raised {obstructed}/100, extended lists realized {realized}/100")


def test_criterion_6_brauer_and_rado(report):
    rng = np.random.default_rng(6)
    worst_b = worst_r = 0.0
    for _ in range(200):
        n = int(rng.integers(2, 11))
        M, lam, V = well_spaced_diagonalizable(rng, n)
        k = int(rng.integers(n))
        v = V[:, k]
        q = rng.normal(size=n)
        shift = (n + 1.0 + rng.uniform() - lam[k]) / float(v @ q)
        q *= shift
        expect = lam.astype(complex)
        expect[k] = lam[k] + float(v @ q)
        got = eigenvalues(brauer_update(M, v, q))
        worst_b = max(worst_b, match_spectra(expect, got).max_distance)

        r = int(rng.integers(1, n + 1))
        X = V[:, :r]
        Cmat = 0.3 * rng.normal(size=(r, n))
        omega = np.diag(lam[:r])
        expect = list(np.linalg.eigvals(omega + Cmat @ X)) + list(lam[r:])
        got = eigenvalues(rado_update(M, X, Cmat))
        worst_r = max(worst_r, match_spectra(expect, got).max_distance)
    ok = worst_b <= 1e-8 and worst_r <= 1e-8
    report(6, ok, f"Brauer shift error {worst_b:.2e}, Rado spectrum error {worst_r:.2e} (<= 1e-8)")


def test_criterion_7_reduction_consistency(report):
    rng = np.random.default_rng(7)
    worst, worst_perron = 0.0, 0.0
    for i in range(300):
        n = int(rng.integers(2, 14))
        nonneg = i % 2 == 0
        C = random_centro(rng, n, nonneg)
        plus, minus = reduce(C)
        parts = list(eigenvalues(plus)) + (list(eigenvalues(minus)) if minus.size else [])
        worst = max(worst, match_spectra(parts, eigenvalues(C), 1e-8).max_distance)
        if nonneg:
            pc, pp = perron_vector(C).value, perron_vector(plus).value
            worst_perron = max(worst_perron, abs(pc - pp) / max(pc, 1.0))
    ok = worst <= 1e-8 and worst_perron <= 1e-9
    report(7, ok, f"reduction: spectrum error {worst:.2e} (<= 1e-8), Perron rel. error {worst_perron:.2e} (<= 1e-9)")


def _real_case(rng):
    while True:
        l1 = rng.uniform(1.0, 10.0)
        rest = rng.uniform(-l1, l1, 3)
        if rng.random() < 0.5:
            rest = -np.abs(rest)
        lam = [l1, *rest]
        s = sum(lam)
        if s < 0:
            continue
        w1 = rng.uniform(0.0, min(l1, s / 2))
        w2 = s / 2 - w1
        l3, l4 = lam[2], lam[3]
        if not (0 <= w2 <= l1 and w1 >= l3 and w2 >= l4):
            continue
        if (2 * w1 - l3) * (2 * w2 - l4) < lam[0] * lam[1]:
            continue
        return lam, (w1, w2)


def _complex_case(rng):
    while True:
        l1 = rng.uniform(1.0, 10.0)
        l2 = rng.uniform(-l1, l1)
        a = rng.uniform(-l1, l1) / 2
        b = rng.uniform(0.05, l1)
        if l1 + l2 - 2 * abs(a) < 0 or l1 - l2 - 2 * b < 0:
            continue
        s = 0.5 * (l1 + l2 + 2 * a)
        if s < 0:
            continue
        w1 = rng.uniform(0.0, min(l1, s))
        w2 = s - w1
        if not (0 <= w2 <= l1 and w1 >= a and w2 >= a):
            continue
        if (2 * w1 - a) * (2 * w2 - a) < l1 * l2 + b * b:
            continue
        return [l1, l2, complex(a, b), complex(a, -b)], (w1, w2)


REAL_VIOLATIONS = {
    "i": ([6, 1, -2, -3], (-0.5, 1.5)),
    "ii": ([6, 1, -2, -3], (1.0, 1.0)),
    "iii": ([6, 0.5, 2, -1], (1.5, 2.25)),
    "iv": ([6, 5, -1, -1], (0.5, 4.0)),
}
COMPLEX_VIOLATIONS = {
    "pre": ([10, 9, 1 + 1j, 1 - 1j], (4.0, 5.5)),
    "i": ([10, 3, 1 + 1j, 1 - 1j], (-0.5, 8.0)),
    "ii": ([10, 3, 1 + 1j, 1 - 1j], (4.0, 4.0)),
    "iii": ([10, 3, 1 + 1j, 1 - 1j], (1.0, 6.5)),
    "iv": ([10, -2, 3 + 0.5j, 3 - 0.5j], (2.5, 4.5)),
}


def test_criterion_8_four_by_four_closed_forms(report):
    rng = np.random.default_rng(8)
    worst, min_margin, diag_exact = 0.0, np.inf, True
    for builder, make in [(realize_4x4_diag_real, _real_case), (realize_4x4_diag_complex, _complex_case)]:
        for _ in range(300):
            lam, (w1, w2) = make(rng)
            r = builder(lam, (w1, w2, w2, w1), tol=1e-9)
            diag_exact &= bool(np.all(np.diag(r.matrix) == np.array([w1, w2, w2, w1])))
            worst = max(worst, r.report.spectrum.max_distance)
            min_margin = min(min_margin, r.report.nonneg_margin)
    named = []
    for builder, table in [(realize_4x4_diag_real, REAL_VIOLATIONS),
                           (realize_4x4_diag_complex, COMPLEX_VIOLATIONS)]:
        for cond, (lam, w) in table.items():
            try:
                builder(lam, w)
                named.append(False)
            except ConditionViolation as exc:
                named.append(exc.condition == cond)
    ok = diag_exact and min_margin >= 0 and worst <= 1e-9 and all(named)
    report(8, ok, f"4x4 closed forms: exact diagonal {diag_exact}, margin {min_margin:.3g}, "
                  f"spectrum {worst:.2e} (<= 1e-9), violations named {sum(named)}/{len(named)}")


def test_criterion_9_oracle_self_test(report):
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(500):
        deg = int(rng.integers(1, 11))
        roots = separated_roots(rng, deg)
        got = eigenvalues(companion_of(roots))
        worst = max(worst, match_spectra(roots, got).max_distance)
    agree = True
    for _ in range(200):
        n = int(rng.integers(1, 7))
        T = rng.normal(size=n) + 1j * rng.normal(size=n)
        Cv = T[rng.permutation(n)] + 0.3 * (rng.normal(size=n) + 1j * rng.normal(size=n))
        agree &= abs(match_spectra(T, Cv).max_distance - brute_force_bottleneck(T, Cv)) <= 1e-15
    ok = worst <= 1e-8 and agree
    report(9, ok, f"oracle: planted-root error {worst:.2e} (<= 1e-8), assignment equals brute force {agree}")
