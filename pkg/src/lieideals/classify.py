"""Ring-level predicates (simple / prime / semiprime / exceptional) and the
Lie-ideal classification decision procedures.

An "exceptional" algebra has characteristic 2 and dimension 4 over its
center; these are exactly the algebras where the middle (plane) case of
the Lie-ideal trichotomy occurs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .algebra import Algebra, Element
from .errors import (
    BudgetExceededError,
    NotLieIdealError,
    TheoremViolationError,
    UnsupportedAlgebraError,
)
from .finite_linalg import Subspace, span, span_rows, subspace_leq, subspace_sum
from .report import Collector, CheckReport, element_obj, relation, subspace_obj
from .subspace_calc import (
    bracket_space,
    c_span,
    center,
    centralizer,
    commutator_space,
    dim_over_c,
    is_lie_ideal,
    lie_ideal_violation,
    noncentral_elements,
    power_space,
    product_space,
)

CENTRAL = "CENTRAL"
PLANE = "PLANE"
CONTAINS_COMMUTATORS = "CONTAINS_COMMUTATORS"

DEFAULT_BUDGET = 2**20


@dataclass(frozen=True)
class LieIdealClass:
    """Outcome of the trichotomy for one Lie ideal: the set of cases that
    hold, plus the noncentral witness of the plane case when present."""

    flags: frozenset
    plane_witness: Element | None = None


def is_commutative(r: Algebra) -> bool:
    return r.is_commutative()


def _nonzero_coords(r: Algebra) -> np.ndarray:
    coords = r.all_element_coords()
    return coords[coords.any(axis=1)]


def is_simple(r: Algebra, budget: int = DEFAULT_BUDGET) -> bool:
    """R^2 != 0 and every nonzero element generates R as an ideal."""
    if "is_simple" in r._cache:
        return r._cache["is_simple"]
    count = r.field.p**r.dim
    if count > budget:
        raise BudgetExceededError(f"simplicity scan needs {count} elements, budget {budget}")
    t, d, p = r.table, r.dim, r.field.p
    result = bool(t.any())  # R^2 != 0
    if result:
        for a in _nonzero_coords(r):
            ea = np.einsum("ijk,j->ik", t, a) % p  # rows: e_i a
            ae = np.einsum("ijk,i->jk", t, a) % p  # rows: a e_j
            eae = (np.einsum("im,mjk->ijk", ea, t) % p).reshape(-1, d)
            stacked = np.vstack([a[None, :], ea, ae, eae])
            _, pivots = kernels.rref(stacked, p)
            if len(pivots) != d:
                result = False
                break
    r._cache["is_simple"] = result
    return result


def is_prime(r: Algebra, budget: int = DEFAULT_BUDGET) -> bool:
    """aRb = 0 forces a = 0 or b = 0.

    Element path: for each nonzero a, the set {b : aRb = 0} is a subspace;
    primeness says it is trivial.  Falls back to the ideal-level criterion
    (no two nonzero ideals multiply to zero) when the element scan exceeds
    the budget; both are run and cross-checked when both are feasible.
    """
    if "is_prime" in r._cache:
        return r._cache["is_prime"]
    t, d, p = r.table, r.dim, r.field.p
    element_feasible = p ** (2 * d) <= budget
    elem_result = None
    if element_feasible:
        from .finite_linalg import nullspace

        elem_result = True
        for a in _nonzero_coords(r):
            ae = np.einsum("jik,j->ik", t, a) % p  # rows i: a e_i
            mat = np.einsum("im,mlk->ilk", ae, t) % p  # (a e_i b)_k coeff of b_l
            ns = nullspace(r.field, np.transpose(mat, (0, 2, 1)).reshape(-1, d))
            if ns.dim > 0:
                elem_result = False
                break
    ideal_result = None
    if p**d <= DEFAULT_BUDGET:
        from .enumeration import all_ideals

        ideals = [i for i in all_ideals(r) if not i.is_zero()]
        ideal_result = all(
            not product_space(i, j, r).is_zero() for i in ideals for j in ideals
        ) and bool(ideals)
    if elem_result is not None and ideal_result is not None and elem_result != ideal_result:
        raise TheoremViolationError(
            {"algebra": r.name}, "element-level and ideal-level primeness disagree"
        )
    result = elem_result if elem_result is not None else ideal_result
    if result is None:
        raise BudgetExceededError(f"primeness of {r.name} exceeds budget {budget}")
    r._cache["is_prime"] = result
    return result


def is_semiprime(r: Algebra, budget: int = DEFAULT_BUDGET) -> bool:
    """aRa = 0 forces a = 0 (exhaustive element scan, batched)."""
    if "is_semiprime" in r._cache:
        return r._cache["is_semiprime"]
    t, d, p = r.table, r.dim, r.field.p
    count = p**d
    if count > budget:
        from .enumeration import all_ideals

        if count > DEFAULT_BUDGET:
            raise BudgetExceededError(f"semiprimeness of {r.name} exceeds budget {budget}")
        ideals = [i for i in all_ideals(r) if not i.is_zero()]
        result = all(not product_space(i, i, r).is_zero() for i in ideals)
    else:
        result = True
        coords = _nonzero_coords(r)
        step = 2048
        for lo in range(0, coords.shape[0], step):
            x = coords[lo : lo + step]
            left = np.einsum("nj,jik->nik", x, t) % p  # (a e_i) rows
            right = np.einsum("nl,mlk->nmk", x, t) % p  # (e_m a) rows
            res = np.matmul(left, right) % p  # res[n,i,k] = (a e_i a)_k
            if (~res.any(axis=(1, 2))).any():
                result = False
                break
    r._cache["is_semiprime"] = result
    return result


def is_exceptional(r: Algebra) -> bool:
    """char 2 and dimension 4 over the center; cross-checked against the
    commutator criterion 0 != [[R,R],[R,R]] <= Z(R)."""
    if r.unity is None:
        raise UnsupportedAlgebraError("is_exceptional requires a unital algebra")
    if not is_simple(r):
        raise UnsupportedAlgebraError("is_exceptional requires a simple algebra")
    if r.is_commutative():
        raise UnsupportedAlgebraError("is_exceptional requires a noncommutative algebra")
    if "is_exceptional" in r._cache:
        return r._cache["is_exceptional"]
    by_definition = r.field.p == 2 and dim_over_c(r, r.full_space()) == 4
    comm = commutator_space(r)
    double = bracket_space(comm, comm, r)
    by_criterion = (not double.is_zero()) and subspace_leq(double, center(r))
    if by_definition != by_criterion:
        raise TheoremViolationError(
            {"algebra": r.name, "definition": by_definition, "criterion": by_criterion},
            "exceptionality definition disagrees with the commutator criterion",
        )
    r._cache["is_exceptional"] = by_definition
    return by_definition


def _require_simple_unital(r: Algebra, what: str) -> None:
    if r.unity is None:
        raise UnsupportedAlgebraError(f"{what} requires a unital algebra")
    if not is_simple(r):
        raise UnsupportedAlgebraError(f"{what} requires a simple algebra")


def _plane_span(r: Algebra, a: np.ndarray) -> Subspace:
    """Z(R)a + Z(R) as a subspace (the candidate plane through a)."""
    line = span(r.field, [a], r.dim)
    return c_span(r, subspace_sum(line, center(r)))


def classify_lie_ideal(r: Algebra, l: Subspace) -> LieIdealClass:
    """Decide which cases of the trichotomy hold for a Lie ideal of a
    simple unital algebra; raises if none does (a theorem violation)."""
    _require_simple_unital(r, "classify_lie_ideal")
    if not is_lie_ideal(r, l):
        vec, basis_index = lie_ideal_violation(r, l)
        raise NotLieIdealError(
            {"element": element_obj(vec), "bracket_basis_index": int(basis_index)}
        )
    z = center(r)
    flags = set()
    witness: Element | None = None
    central = subspace_leq(l, z)
    if central:
        flags.add(CENTRAL)
    lc = c_span(r, l)
    if not central and dim_over_c(r, lc) == 2:
        for a in noncentral_elements(r, l):
            if _plane_span(r, a) == lc:
                witness = Element(r, a)
                flags.add(PLANE)
                break
        if PLANE in flags:
            # sharpened simple-ring form: the Lie ideal itself is the plane
            plane = subspace_sum(c_span(r, span(r.field, [witness.coords], r.dim)), z)
            if plane != l:
                raise TheoremViolationError(
                    {"algebra": r.name, "lie_ideal": subspace_obj(l)},
                    "plane Lie ideal is not of the form Z(R)a + Z(R)",
                )
    comm = commutator_space(r)
    if subspace_leq(comm, lc):
        flags.add(CONTAINS_COMMUTATORS)
        if not subspace_leq(comm, l):
            raise TheoremViolationError(
                {"algebra": r.name, "lie_ideal": subspace_obj(l)},
                "[R,R] <= LC but [R,R] is not inside L in a simple algebra",
            )
    if not flags:
        raise TheoremViolationError(
            {"algebra": r.name, "lie_ideal": subspace_obj(l)},
            "Lie ideal fits no case of the trichotomy",
        )
    return LieIdealClass(flags=frozenset(flags), plane_witness=witness)


def abelian_equivalences(r: Algebra, l: Subspace, check_id: str = "s4.lemma4.1") -> CheckReport:
    """The three equivalent descriptions of a noncentral abelian Lie ideal:
    (i) [L,L] = 0; (ii) exceptional ring and LC = [a,RC] = Ca+C for every
    noncentral a in L; (iii) dim over the center of LC is 2."""
    _require_simple_unital(r, "abelian_equivalences")
    z = center(r)
    if subspace_leq(l, z) or not is_lie_ideal(r, l):
        raise UnsupportedAlgebraError("abelian_equivalences needs a noncentral Lie ideal")
    col = Collector(check_id, r.name)
    cond_i = bracket_space(l, l, r).is_zero()
    lc = c_span(r, l)
    cond_iii = dim_over_c(r, lc) == 2
    cond_ii = is_exceptional(r)
    bad_a = None
    if cond_ii:
        full = r.full_space()
        for a in noncentral_elements(r, l):
            line = span(r.field, [a], r.dim)
            adj = c_span(r, bracket_space(line, full, r))
            if not (lc == adj == _plane_span(r, a)):
                cond_ii = False
                bad_a = a
                break
    if cond_i == cond_ii == cond_iii:
        col.ok()
    else:
        col.fail(
            {
                "kind": "lemma4.1-divergence",
                "lie_ideal": subspace_obj(l),
                "abelian": cond_i,
                "plane_form": cond_ii,
                "dim2": cond_iii,
                "bad_element": element_obj(bad_a) if bad_a is not None else None,
            }
        )
    return col.report()


def plane_lie_ideal_criterion(r: Algebra, check_id: str = "s4.theorem4.4") -> CheckReport:
    """Planes Ca+C through every noncentral commutator are Lie ideals iff
    the algebra is exceptional; plus the single-element plane criterion
    [a, RC] = Ca+C."""
    _require_simple_unital(r, "plane_lie_ideal_criterion")
    if r.is_commutative():
        raise UnsupportedAlgebraError("plane_lie_ideal_criterion needs a noncommutative algebra")
    col = Collector(check_id, r.name)
    full = r.full_space()
    exceptional = is_exceptional(r)
    all_planes_lie = True
    bad = None
    for a in noncentral_elements(r, commutator_space(r)):
        if not is_lie_ideal(r, _plane_span(r, a)):
            all_planes_lie = False
            bad = a
            break
    col.check(
        all_planes_lie == exceptional,
        lambda: {
            "kind": "theorem4.4-divergence",
            "exceptional": exceptional,
            "all_planes_lie_ideals": all_planes_lie,
            "bad_element": element_obj(bad) if bad is not None else None,
        },
    )
    # single-element criterion, over every noncentral element of R
    for a in noncentral_elements(r, full):
        plane = _plane_span(r, a)
        lhs = is_lie_ideal(r, plane)
        line = span(r.field, [a], r.dim)
        rhs = c_span(r, bracket_space(line, full, r)) == plane
        if lhs == rhs:
            col.ok()
        else:
            col.fail(
                {
                    "kind": "lemma4.3-divergence",
                    "element": element_obj(a),
                    "plane_is_lie_ideal": lhs,
                    "bracket_is_plane": rhs,
                }
            )
            break
    return col.report()
