"""Subspace-level ring operations: products, brackets, closures, centers."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieideals.algebra import matrix_algebra
from lieideals.errors import UnsupportedAlgebraError
from lieideals.finite_linalg import span, span_rows, subspace_leq, subspace_sum
from lieideals.subspace_calc import (
    bracket_space,
    c_span,
    center,
    centralizer,
    commutator_space,
    dim_over_c,
    ideal_generated,
    idempotent_span,
    is_ideal,
    is_lie_ideal,
    is_unit,
    lie_ideal_closure,
    lie_ideal_violation,
    power_space,
    product_space,
    subring_closure,
)

E11, E12, E21, E22 = 0, 1, 2, 3  # basis indices in matrix_algebra(2, p)


def unit_span(r, *indices):
    rows = [np.eye(r.dim, dtype=np.int64)[i] for i in indices]
    return span(r.field, rows, r.dim)


def test_product_space(m2f2):
    a = unit_span(m2f2, E12)
    b = unit_span(m2f2, E21)
    assert product_space(a, b, m2f2) == unit_span(m2f2, E11)
    assert product_space(m2f2.zero_space(), b, m2f2).is_zero()
    assert product_space(m2f2.full_space(), m2f2.full_space(), m2f2) == m2f2.full_space()


def test_bracket_space_trace_zero(m2f2, m2f3):
    for r in (m2f2, m2f3):
        comm = bracket_space(r.full_space(), r.full_space(), r)
        assert comm.dim == 3
        # trace-zero: e12, e21 and e11 - e22 span it
        p = r.field.p
        gens = [
            np.array([0, 1, 0, 0]),
            np.array([0, 0, 1, 0]),
            np.array([1, 0, 0, p - 1]),
        ]
        assert comm == span(r.field, gens, 4)


def test_power_space(m2f2):
    plane = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    assert power_space(plane, 1, m2f2) == plane
    assert power_space(plane, 2, m2f2) == plane  # e12*e12 = 0, plane is closed
    sl2 = commutator_space(m2f2)
    assert power_space(sl2, 2, m2f2) == m2f2.full_space()


def test_closures(m2f2, m2f3):
    # char 2: [e12, e21] = 1 and [e12, e11] = e12, so the closure of e12 is
    # the plane {1, e12}, itself a Lie ideal of the exceptional ring
    line = unit_span(m2f2, E12)
    plane = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    assert lie_ideal_closure(m2f2, line) == plane
    # char 3: the closure of e12 is the full trace-zero space
    line3 = unit_span(m2f3, E12)
    assert lie_ideal_closure(m2f3, line3) == commutator_space(m2f3)
    e11 = unit_span(m2f2, E11)
    assert lie_ideal_closure(m2f2, e11) == m2f2.full_space()
    sub = subring_closure(m2f2, line)
    assert product_space(sub, sub, m2f2) is not None and subspace_leq(
        product_space(sub, sub, m2f2), sub
    )
    assert ideal_generated(m2f2, line) == m2f2.full_space()
    assert is_ideal(m2f2, ideal_generated(m2f2, line))


def test_is_lie_ideal(m2f2, m2f3):
    plane2 = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    assert is_lie_ideal(m2f2, plane2)
    plane3 = span(m2f3.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    assert not is_lie_ideal(m2f3, plane3)
    vec, idx = lie_ideal_violation(m2f3, plane3)
    assert vec in plane3
    assert is_lie_ideal(m2f3, m2f3.full_space())


def test_center(m2f2, m2f3, tri22, m2_plus_m3):
    assert center(m2f2) == span(m2f2.field, [np.array([1, 0, 0, 1])], 4)
    assert center(m2f3).dim == 1
    assert center(tri22).dim == 1
    assert center(m2_plus_m3).dim == 2


def test_centralizer(m2f2):
    # centralizer of e12 in M2(F2) is the plane {0, 1, e12, 1+e12}
    line = unit_span(m2f2, E12)
    plane = span(m2f2.field, [np.array([1, 0, 0, 1]), np.array([0, 1, 0, 0])], 4)
    assert centralizer(m2f2, line) == plane
    assert centralizer(m2f2, m2f2.full_space()) == center(m2f2)
    assert centralizer(m2f2, m2f2.zero_space()) == m2f2.full_space()


def test_c_span_dim(m2f2):
    line = unit_span(m2f2, E12)
    cs = c_span(m2f2, subspace_sum(line, center(m2f2)))
    assert dim_over_c(m2f2, cs) == 2
    assert dim_over_c(m2f2, m2f2.full_space()) == 4
    assert dim_over_c(m2f2, center(m2f2)) == 1


def test_c_span_refuses_nonsimple(tri22):
    with pytest.raises(UnsupportedAlgebraError):
        c_span(tri22, tri22.full_space())


def test_is_unit(m2f2):
    assert is_unit(m2f2, m2f2.unity)
    assert is_unit(m2f2, m2f2.element([1, 1, 0, 1]))
    assert not is_unit(m2f2, m2f2.basis_element(E11))  # e11 is a zero divisor
    assert not is_unit(m2f2, m2f2.zero())


def test_idempotent_span(m2f2, gf4):
    assert idempotent_span(m2f2) == m2f2.full_space()
    assert idempotent_span(gf4).dim == 1  # only 0 and 1 are idempotent in a field


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_product_bilinear_containment(seed):
    # span-level product contains every elementwise product of members
    r = matrix_algebra(2, 3)
    rng = np.random.default_rng(seed)
    a = span_rows(r.field, rng.integers(0, 3, size=(2, 4), dtype=np.int64), 4)
    b = span_rows(r.field, rng.integers(0, 3, size=(2, 4), dtype=np.int64), 4)
    prod = product_space(a, b, r)
    brk = bracket_space(a, b, r)
    for x in a.basis:
        for y in b.basis:
            assert r.mul_coords(x, y) in prod
            xy = r.element(x).bracket(r.element(y))
            assert xy.coords in brk
