"""The Lie-ideal calculus: products, brackets, closures, generated ideals,
centralizers and center-spans of subspaces of an algebra.

All "additive subgroup generated by" constructions are computed as spans
over basis pairs; bilinearity over the central prime field makes this
exact.  Every function is pure and safe to share across threads.
"""

from __future__ import annotations

import numpy as np

from .algebra import Algebra, Element
from .errors import BudgetExceededError, DimensionMismatchError, UnsupportedAlgebraError
from .finite_linalg import (
    Subspace,
    all_elements,
    contains_rows,
    nullspace,
    solve,
    span_rows,
    subspace_leq,
    subspace_sum,
)


def _check_in(r: Algebra, s: Subspace) -> None:
    if s.ambient_dim != r.dim or s.field != r.field:
        raise DimensionMismatchError(
            f"subspace in GF({s.field.p})^{s.ambient_dim} vs algebra of dim {r.dim}"
        )


def product_space(a: Subspace, b: Subspace, r: Algebra) -> Subspace:
    """Span of all products xy with x in a, y in b."""
    _check_in(r, a)
    _check_in(r, b)
    if a.is_zero() or b.is_zero():
        return r.zero_space()
    prods = np.einsum("ai,bj,ijk->abk", a.basis, b.basis, r.table) % r.field.p
    return span_rows(r.field, prods.reshape(-1, r.dim), r.dim)


def bracket_space(a: Subspace, b: Subspace, r: Algebra) -> Subspace:
    """Span of all commutators [x, y] with x in a, y in b."""
    _check_in(r, a)
    _check_in(r, b)
    if a.is_zero() or b.is_zero():
        return r.zero_space()
    comm = r.table - np.transpose(r.table, (1, 0, 2))
    brs = np.einsum("ai,bj,ijk->abk", a.basis, b.basis, comm) % r.field.p
    return span_rows(r.field, brs.reshape(-1, r.dim), r.dim)


def power_space(l: Subspace, m: int, r: Algebra) -> Subspace:
    """L^m: L^1 = L, L^m = L^(m-1) * L."""
    if m < 1:
        raise ValueError(f"power must be >= 1, got {m}")
    _check_in(r, l)
    out = l
    for _ in range(m - 1):
        out = product_space(out, l, r)
    return out


def ideal_generated(r: Algebra, s: Subspace) -> Subspace:
    """The two-sided ideal generated by s: s + Rs + sR + RsR."""
    _check_in(r, s)
    if s.is_zero():
        return s
    full = r.full_space()
    rs = product_space(full, s, r)
    sr = product_space(s, full, r)
    rsr = product_space(rs, full, r)
    out = subspace_sum(subspace_sum(s, rs), subspace_sum(sr, rsr))
    assert is_ideal(r, out), "generated ideal failed its own ideal test"
    return out


def lie_ideal_closure(r: Algebra, s: Subspace) -> Subspace:
    """Smallest Lie ideal containing s (fixpoint of T <- T + [T, R])."""
    _check_in(r, s)
    full = r.full_space()
    cur = s
    while True:
        nxt = subspace_sum(cur, bracket_space(cur, full, r))
        if nxt == cur:
            return cur
        cur = nxt


def subring_closure(r: Algebra, s: Subspace) -> Subspace:
    """Smallest multiplicatively closed subspace containing s."""
    _check_in(r, s)
    cur = s
    while True:
        nxt = subspace_sum(cur, product_space(cur, cur, r))
        if nxt == cur:
            return cur
        cur = nxt


def is_lie_ideal(r: Algebra, s: Subspace) -> bool:
    _check_in(r, s)
    return subspace_leq(bracket_space(s, r.full_space(), r), s)


def lie_ideal_violation(r: Algebra, s: Subspace) -> tuple[np.ndarray, int] | None:
    """A witness (vector of s, basis index i) with [v, e_i] outside s, if any."""
    _check_in(r, s)
    comm = r.table - np.transpose(r.table, (1, 0, 2))
    for v in s.basis:
        brs = np.einsum("j,jik->ik", v, comm) % r.field.p
        # row i of brs is [v, e_i]
        inside = contains_rows(s, brs)
        if not inside.all():
            i = int(np.nonzero(~inside)[0][0])
            return v, i
    return None


def is_ideal(r: Algebra, s: Subspace) -> bool:
    _check_in(r, s)
    full = r.full_space()
    left = product_space(full, s, r)
    right = product_space(s, full, r)
    return subspace_leq(subspace_sum(left, right), s)


def center(r: Algebra) -> Subspace:
    """Z(R): the solution space of [x, e_i] = 0 for all basis elements."""
    if "center" not in r._cache:
        comm = (r.table - np.transpose(r.table, (1, 0, 2))) % r.field.p
        # [e_i, e_j]_k = comm[i,j,k]; x central iff sum_i x_i comm[i,j,k] = 0
        mat = np.transpose(comm, (1, 2, 0)).reshape(r.dim * r.dim, r.dim)
        r._cache["center"] = nullspace(r.field, mat)
    return r._cache["center"]


def commutator_space(r: Algebra) -> Subspace:
    """[R, R] as a subspace."""
    if "commutator_space" not in r._cache:
        full = r.full_space()
        r._cache["commutator_space"] = bracket_space(full, full, r)
    return r._cache["commutator_space"]


def centralizer(r: Algebra, s: Subspace) -> Subspace:
    """All x with [x, s] = 0 for every s in the subspace."""
    _check_in(r, s)
    if s.is_zero():
        return r.full_space()
    comm = (r.table - np.transpose(r.table, (1, 0, 2))) % r.field.p
    # [x, v]_k = sum_i x_i (sum_j v_j comm[i,j,k])
    mat = np.einsum("sj,ijk->ski", s.basis, comm) % r.field.p
    return nullspace(r.field, mat.reshape(-1, r.dim))


def _require_simple_unital(r: Algebra, what: str) -> None:
    from .classify import is_simple  # deferred: classify imports this module

    if r.unity is None:
        raise UnsupportedAlgebraError(f"{what} requires a unital algebra")
    if not is_simple(r):
        raise UnsupportedAlgebraError(f"{what} requires a simple algebra")


def c_span(r: Algebra, s: Subspace) -> Subspace:
    """The Z(R)-submodule generated by s.

    Restricted to simple unital algebras, where the extended centroid is
    exactly the center and RC = R; refusing anything else keeps the
    theorem checks honest.
    """
    _require_simple_unital(r, "c_span")
    _check_in(r, s)
    if s.is_zero():
        return s
    z = center(r)
    prods = np.einsum("si,zj,ijk->szk", s.basis, z.basis, r.table) % r.field.p
    return span_rows(r.field, prods.reshape(-1, r.dim), r.dim)


def dim_over_c(r: Algebra, s: Subspace) -> int:
    """dim of a Z(R)-submodule over the center (exact division)."""
    _require_simple_unital(r, "dim_over_c")
    if c_span(r, s) != s:
        raise UnsupportedAlgebraError("subspace is not a center-submodule")
    zdim = center(r).dim
    assert s.dim % zdim == 0
    return s.dim // zdim


def is_unit(r: Algebra, a: Element) -> bool:
    """True iff a has a two-sided inverse (ax = 1 and ya = 1 solvable)."""
    if r.unity is None:
        raise UnsupportedAlgebraError("is_unit requires a unital algebra")
    u = r.unity.coords
    # (ax)_k = sum_j x_j (sum_i a_i t[i,j,k])
    left = np.einsum("i,ijk->kj", a.coords, r.table) % r.field.p
    if solve(r.field, left, u) is None:
        return False
    # (ya)_k = sum_i y_i (sum_j a_j t[i,j,k])
    right = np.einsum("j,ijk->ki", a.coords, r.table) % r.field.p
    return solve(r.field, right, u) is not None


def _batched_squares(r: Algebra, coords: np.ndarray) -> np.ndarray:
    p = r.field.p
    out = np.empty_like(coords)
    step = 4096
    for lo in range(0, coords.shape[0], step):
        x = coords[lo : lo + step]
        out[lo : lo + step] = np.einsum("ni,nj,ijk->nk", x, x, r.table) % p
    return out


def all_idempotents(r: Algebra, element_budget: int = 2**20) -> np.ndarray:
    """Coordinate rows of every idempotent (exhaustive element scan)."""
    count = r.field.p**r.dim
    if count > element_budget:
        raise BudgetExceededError(
            f"idempotent scan needs {count} elements, budget {element_budget}"
        )
    coords = r.all_element_coords()
    squares = _batched_squares(r, coords)
    mask = (squares == coords).all(axis=1)
    return coords[mask]


def idempotent_span(r: Algebra, element_budget: int = 2**20) -> Subspace:
    """E(R): the span of all idempotents of the algebra."""
    idem = all_idempotents(r, element_budget)
    return span_rows(r.field, idem, r.dim)


def noncentral_elements(r: Algebra, s: Subspace) -> np.ndarray:
    """Coordinate rows of the elements of s outside the center."""
    elems = all_elements(s)
    central = contains_rows(center(r), elems)
    return elems[~central]
