"""Ring predicates and the Lie-ideal trichotomy classifier."""

from collections import Counter

import numpy as np
import pytest

from lieideals.classify import (
    CENTRAL,
    CONTAINS_COMMUTATORS,
    PLANE,
    abelian_equivalences,
    classify_lie_ideal,
    is_exceptional,
    is_prime,
    is_semiprime,
    is_simple,
    plane_lie_ideal_criterion,
)
from lieideals.enumeration import all_lie_ideals
from lieideals.errors import NotLieIdealError, UnsupportedAlgebraError
from lieideals.finite_linalg import span, subspace_leq
from lieideals.subspace_calc import center, commutator_space


def test_simple_prime_semiprime_catalog(m2f2, m2f3, m3f2, gf4, tri22, m2_plus_m3):
    for r in (m2f2, m2f3, m3f2, gf4):
        assert is_simple(r) and is_prime(r) and is_semiprime(r)
    assert not is_simple(tri22)
    assert not is_semiprime(tri22)  # strictly upper-triangular square to zero
    assert not is_simple(m2_plus_m3)
    assert not is_prime(m2_plus_m3)
    assert is_semiprime(m2_plus_m3)


def test_exceptional_catalog(m2f2, m2f3, m3f2, m2f2_gf4, gf4, tri22):
    assert is_exceptional(m2f2)
    assert not is_exceptional(m2f3)
    assert not is_exceptional(m3f2)
    assert is_exceptional(m2f2_gf4)
    with pytest.raises(UnsupportedAlgebraError):
        is_exceptional(gf4)  # commutative: the notion does not apply
    with pytest.raises(UnsupportedAlgebraError):
        is_exceptional(tri22)  # not simple


def test_census_m2f2(m2f2):
    flags = Counter()
    for l in all_lie_ideals(m2f2):
        cls = classify_lie_ideal(m2f2, l)
        flags.update(cls.flags)
    assert flags == Counter({CENTRAL: 2, PLANE: 3, CONTAINS_COMMUTATORS: 2})


def test_no_planes_outside_exceptional(m2f3, m3f2):
    for r in (m2f3, m3f2):
        for l in all_lie_ideals(r):
            assert PLANE not in classify_lie_ideal(r, l).flags


def test_plane_witness(m2f2):
    plane = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    cls = classify_lie_ideal(m2f2, plane)
    assert cls.flags == frozenset({PLANE})
    w = cls.plane_witness
    assert w is not None and w.coords in plane
    assert not subspace_leq(span(m2f2.field, [w.coords], 4), center(m2f2))


def test_classify_rejects_non_lie_ideal(m2f3):
    bad = span(m2f3.field, [np.array([0, 1, 0, 0])], 4)
    with pytest.raises(NotLieIdealError):
        classify_lie_ideal(m2f3, bad)


def test_classify_refuses_nonsimple(tri22):
    with pytest.raises(UnsupportedAlgebraError):
        classify_lie_ideal(tri22, tri22.zero_space())


def test_abelian_equivalences(m2f2, m2f3):
    plane = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    rep = abelian_equivalences(m2f2, plane)
    assert rep.status == "pass"
    sl2 = commutator_space(m2f2)
    assert abelian_equivalences(m2f2, sl2).status == "pass"
    # in a non-exceptional ring no noncentral Lie ideal is abelian
    for l in all_lie_ideals(m2f3):
        if subspace_leq(l, center(m2f3)):
            continue
        assert abelian_equivalences(m2f3, l).status == "pass"


def test_plane_criterion(m2f2, m2f3, m3f2):
    for r in (m2f2, m2f3, m3f2):
        assert plane_lie_ideal_criterion(r).status == "pass"
