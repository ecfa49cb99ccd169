"""Theorem suites: full passes on the catalog, witness round trips,
vacuity accounting and mutation sensitivity."""

import json

import numpy as np
import pytest

from lieideals.algebra import Algebra, matrix_algebra
from lieideals.finite_linalg import span
from lieideals.report import relation, subspace_obj
from lieideals.verify import (
    VerifyConfig,
    applicable_suites,
    mutation_outcomes,
    recheck_witness,
    reports_to_jsonl,
    run_all,
    run_suite,
    scripted_mutations,
    suite_s5_theoremB,
    theorem_b_instance,
)

FAST = VerifyConfig(samples=50)


def _assert_all_pass(reports):
    bad = [(r.check_id, r.witness) for r in reports if r.status == "fail"]
    assert not bad, bad


def test_run_all_m2f2(m2f2):
    reports = run_all(m2f2)
    _assert_all_pass(reports)
    suites = {r.check_id.split(".")[0] for r in reports}
    assert suites == {"s2", "s3", "s4", "s5", "s6", "s7", "s8"}


def test_run_all_m2f3(m2f3):
    _assert_all_pass(run_all(m2f3))


def test_run_all_m3f2(m3f2):
    _assert_all_pass(run_all(m3f2, FAST))


def test_dispatch_respects_hypotheses(tri22, m2_plus_m3, m2f2):
    assert applicable_suites(tri22) == ["s2"]
    assert applicable_suites(m2_plus_m3) == ["s2", "s3"]
    assert applicable_suites(m2f2) == ["s2", "s3", "s4", "s5", "s6", "s7", "s8"]
    _assert_all_pass(run_all(tri22))
    # a refused suite reports skipped instead of running
    reps = run_suite(tri22, "s4")
    assert len(reps) == 1 and reps[0].status == "skipped"


def test_direct_sum_semiprime_suites(m2_plus_m3):
    reports = run_all(m2_plus_m3, FAST)
    _assert_all_pass(reports)
    by_id = {r.check_id: r for r in reports}
    # Theorem 3.4 must see nonabelian Lie ideals (non-vacuous)
    assert by_id["s3.thm3.4"].instances_tested > 0


def test_nonvacuity_accounting(m2f2):
    reports = run_all(m2f2)
    by_id = {r.check_id: r for r in reports}
    for check_id, rep in by_id.items():
        if rep.status == "pass":
            assert rep.instances_tested > 0, f"{check_id} passed vacuously"
    # the exceptional ring has commuting noncentral pairs (the planes)
    assert by_id["s6.nonvacuity"].instances_tested >= 1


def test_theorem_b_worked_instances(m2f2):
    # L = {1, e12}; predictions from the unital-simple case analysis
    l = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    cases = [
        (np.array([0, 0, 1, 0]), True),  # a = e21, inside the commutators
        (np.array([1, 0, 0, 0]), False),  # a = e11, [a, e12] = e12 not a unit
        (np.array([1, 0, 1, 0]), True),  # a = e11 + e21, [a, e12] = 1 + e12 a unit
    ]
    for a, expected in cases:
        predicted, observed = theorem_b_instance(m2f2, l, a)
        assert predicted == expected == observed


def test_reports_jsonl_schema_and_determinism(m2f2):
    out1 = reports_to_jsonl(run_all(m2f2))
    out2 = reports_to_jsonl(run_all(m2f2))
    assert out1 == out2
    for line in out1.strip().split("\n"):
        obj = json.loads(line)
        assert set(obj) == {"check", "algebra", "status", "instances", "vacuous", "witness"}
        assert obj["status"] in ("pass", "fail", "skipped")
        assert (obj["status"] == "fail") == (obj["witness"] is not None)


def test_seed_changes_sample_not_verdict(m2f2_gf4):
    a = suite_s5_theoremB(m2f2_gf4, samples=50, cfg=VerifyConfig(seed=0))
    b = suite_s5_theoremB(m2f2_gf4, samples=50, cfg=VerifyConfig(seed=1))
    assert all(r.status != "fail" for r in a + b)


def test_recheck_witness_roundtrip(m2f2):
    full = m2f2.full_space()
    zero = m2f2.zero_space()
    # a fabricated failing relation stays failing when re-evaluated
    bad = relation("leq", subspace_obj(full), subspace_obj(zero), expect=True)
    assert recheck_witness(m2f2, bad) is False
    # a true relation re-evaluates as holding
    good = relation("leq", subspace_obj(zero), subspace_obj(full), expect=True)
    assert recheck_witness(m2f2, good) is True
    assert recheck_witness(m2f2, {"kind": "no-relation"}) is None


def test_failing_suite_produces_reevaluable_witness(m2f2):
    # run a simple-ring suite against an algebra breaking its hypotheses is
    # refused; instead, force a failure by checking a wrong expectation:
    # the commutator space of M2(F2) is not central
    from lieideals.subspace_calc import center, commutator_space

    w = relation(
        "leq",
        subspace_obj(commutator_space(m2f2)),
        subspace_obj(center(m2f2)),
        expect=True,
    )
    assert recheck_witness(m2f2, w) is False


def test_scripted_mutations_deterministic():
    muts = scripted_mutations()
    assert len(muts) == 20
    assert muts == scripted_mutations()
    assert len(set(muts)) == 20


def test_mutation_sensitivity():
    outcomes = mutation_outcomes()
    assert len(outcomes) == 20
    assert all(o in ("rejected", "changed") for o in outcomes)


def test_associative_mutant_changes_reports(m2f2):
    # no single flip of the M2(F2) table stays associative, so exercise the
    # "report differs" path with a different associative table instead: the
    # commutative diagonal algebra on the same basis
    table = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(4):
        table[i, i, i] = 1
    diag = Algebra("matrix:2:2", m2f2.field, table)
    assert reports_to_jsonl(run_all(diag)) != reports_to_jsonl(run_all(m2f2))
