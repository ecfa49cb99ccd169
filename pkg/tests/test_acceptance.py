"""Acceptance gate: the ten headline guarantees, one test (and one printed
pass/fail line) each, with wall-clock bounds."""

import time
from collections import Counter

import numpy as np
import pytest

from lieideals.classify import (
    CENTRAL,
    CONTAINS_COMMUTATORS,
    PLANE,
    classify_lie_ideal,
    is_exceptional,
)
from lieideals.enumeration import all_lie_ideals, all_subspaces, contains_nonzero_ideal
from lieideals.errors import UnsupportedAlgebraError
from lieideals.finite_linalg import all_elements, span, subspace_leq, subspace_sum
from lieideals.subspace_calc import (
    bracket_space,
    c_span,
    center,
    centralizer,
    commutator_space,
    dim_over_c,
    is_lie_ideal,
)
from lieideals.verify import (
    VerifyConfig,
    _a_times,
    mutation_outcomes,
    run_suite,
    suite_s2_identities,
    suite_s3_semiprime,
    theorem_b_instance,
)


class timer:
    """Context manager asserting a wall-clock bound and printing one line."""

    def __init__(self, label, bound_s):
        self.label = label
        self.bound_s = bound_s

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.t0
        verdict = "FAIL" if exc_type else "PASS"
        print(f"ACCEPTANCE {self.label}: {verdict} ({elapsed:.2f}s, bound {self.bound_s}s)")
        if exc_type is None:
            assert elapsed < self.bound_s, f"{self.label} exceeded {self.bound_s}s"
        return False


def test_criterion_01_enumeration_oracle(m2f2, m2f3):
    with timer("1 enumeration-oracle", 10):
        for r, expected in ((m2f2, 7), (m2f3, 4)):
            t0 = time.monotonic()
            fast = all_lie_ideals(r)
            brute = sorted(
                (s for s in all_subspaces(r.field, 4) if is_lie_ideal(r, s)),
                key=lambda s: s.sort_key(),
            )
            assert len(fast) == expected
            assert fast == brute
            assert time.monotonic() - t0 < 5
        assert sum(1 for _ in all_subspaces(m2f2.field, 4)) == 67


def test_criterion_02_theorem_a_census(m2f2, m2f3, m3f2):
    with timer("2 trichotomy-census", 5):
        flags = Counter()
        for l in all_lie_ideals(m2f2):
            flags.update(classify_lie_ideal(m2f2, l).flags)
        assert flags == Counter({CENTRAL: 2, PLANE: 3, CONTAINS_COMMUTATORS: 2})
        for r in (m2f3, m3f2):
            for l in all_lie_ideals(r):
                assert PLANE not in classify_lie_ideal(r, l).flags


def test_criterion_03_exceptional_cross_check(m2f2, m2f3, m3f2, m2f2_gf4, gf4):
    # is_exceptional internally cross-checks the definition against the
    # central-double-commutator criterion and raises on disagreement
    with timer("3 exceptional-cross-check", 10):
        assert is_exceptional(m2f2) is True
        assert is_exceptional(m2f3) is False
        assert is_exceptional(m3f2) is False
        assert is_exceptional(m2f2_gf4) is True
        with pytest.raises(UnsupportedAlgebraError):
            is_exceptional(gf4)  # commutative: refused, not classified


def test_criterion_04_any_ring_suite(m2f2, m2f3, m3f2, tri22, tri32, m2_plus_m3):
    with timer("4 any-ring-identities", 60):
        for r in (m2f2, m2f3, m3f2, tri22, tri32, m2_plus_m3):
            reports = suite_s2_identities(r, max_power=3)
            for rep in reports:
                assert rep.status == "pass", (rep.check_id, rep.witness)
                assert rep.instances_tested > 0, f"{rep.check_id} vacuous on {r.name}"


def test_criterion_05_semiprime_suite(m2f2, m2f3, m3f2, m2_plus_m3):
    with timer("5 semiprime-suite", 120):
        for r in (m2f2, m2f3, m3f2, m2_plus_m3):
            reports = suite_s3_semiprime(r, max_power=3)
            by_id = {rep.check_id: rep for rep in reports}
            for rep in reports:
                assert rep.status == "pass", (rep.check_id, rep.witness)
            assert by_id["s3.thm3.4"].instances_tested > 0, f"thm3.4 vacuous on {r.name}"


def _theorem_b_exhaustive(r):
    z = center(r)
    checked = 0
    for l in all_lie_ideals(r):
        if subspace_leq(l, z):
            continue
        for a in all_elements(r.full_space()):
            predicted, observed = theorem_b_instance(r, l, a)
            if predicted is None:
                continue
            assert predicted == observed, (l, a.tolist())
            checked += 1
    return checked


def test_criterion_06_theorem_b_exhaustive(m2f2, m2f2_gf4):
    with timer("6 theorem-b-exhaustive", 70):
        t0 = time.monotonic()
        assert _theorem_b_exhaustive(m2f2) > 0
        # worked instances on L = {1, e12}
        l = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
        for a, expected in (
            ([0, 0, 1, 0], True),  # e21
            ([1, 0, 0, 0], False),  # e11
            ([1, 0, 1, 0], True),  # e11 + e21
        ):
            predicted, observed = theorem_b_instance(m2f2, l, np.array(a))
            assert predicted == expected == observed
        assert time.monotonic() - t0 < 10
        assert _theorem_b_exhaustive(m2f2_gf4) > 0  # 256-element scan


def test_criterion_07_theorem_cde_suites(m2f2, m2f3, m3f2):
    cfg = VerifyConfig(max_power=3, max_factors=3)
    with timer("7 commuting-products-centralizers", 600):
        for r in (m2f2, m2f3, m3f2):
            for suite in ("s6", "s7", "s8"):
                for rep in run_suite(r, suite, cfg):
                    assert rep.status != "fail", (rep.check_id, rep.witness)
                    if rep.instances_skipped:
                        # caps may only kick in above 10^5 instances
                        assert rep.instances_skipped > 10**5, rep.check_id
        # the exceptional run must see at least one commuting noncentral pair
        nonvac = [
            rep
            for rep in run_suite(m2f2, "s6", cfg)
            if rep.check_id == "s6.nonvacuity"
        ]
        assert nonvac and nonvac[0].status == "pass" and nonvac[0].instances_tested >= 1


def test_criterion_08_negative_control(m2f2):
    with timer("8 central-square-negative-control", 5):
        l = commutator_space(m2f2)
        m = bracket_space(l, l, m2f2)
        assert not m.is_zero()
        assert subspace_leq(m, center(m2f2))
        for a in all_elements(m2f2.full_space()):
            s = subspace_sum(m, _a_times(m2f2, a, m))
            assert contains_nonzero_ideal(m2f2, s) is None, a.tolist()


def test_criterion_09_centralizer_theorem(m2f2):
    with timer("9 centralizer-dichotomy", 5):
        z = center(m2f2)
        planes = big = 0
        for k in all_lie_ideals(m2f2):
            if subspace_leq(k, z):
                continue
            kc = c_span(m2f2, k)
            czr = centralizer(m2f2, k)
            if dim_over_c(m2f2, kc) == 2:
                assert czr == kc
                planes += 1
            else:
                assert czr == z
                big += 1
        assert planes == 3 and big == 2


def test_criterion_10_mutation_sensitivity():
    with timer("10 mutation-sensitivity", 120):
        outcomes = mutation_outcomes()
        assert len(outcomes) == 20
        for i, outcome in enumerate(outcomes):
            assert outcome in ("rejected", "changed"), f"mutation {i}: {outcome}"
