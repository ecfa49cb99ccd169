"""Exact enumeration of Lie ideals, two-sided ideals and subspaces.

Every Lie ideal is the sum of the cyclic Lie ideals of its elements, and
Lie ideals are closed under sum, so closing the cyclic closures under
pairwise sums yields the complete lattice; the same argument applies to
two-sided ideals.  A brute-force RREF subspace enumerator provides the
independent oracle for small ambient spaces.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable, Iterator

import numpy as np

from .algebra import Algebra
from .errors import BudgetExceededError
from .finite_linalg import GF, Subspace, span, subspace_leq, subspace_sum
from .subspace_calc import ideal_generated, lie_ideal_closure

DEFAULT_LIMIT = 100000
DEFAULT_BUDGET = 2**20


def _closure_lattice(
    r: Algebra, closure: Callable[[Algebra, Subspace], Subspace], limit: int, budget: int
) -> list[Subspace]:
    count = r.field.p**r.dim
    if count > budget:
        raise BudgetExceededError(f"element scan needs {count} elements, budget {budget}")
    coords = r.all_element_coords()
    coords = coords[coords.any(axis=1)]
    found: set[Subspace] = {r.zero_space()}
    for a in coords:
        found.add(closure(r, span(r.field, [a], r.dim)))
        if len(found) > limit:
            raise BudgetExceededError(f"more than {limit} subspaces in the seed set")
    # close under pairwise sums
    queue = list(found)
    while queue:
        s = queue.pop()
        for t in list(found):
            u = subspace_sum(s, t)
            if u not in found:
                found.add(u)
                queue.append(u)
                if len(found) > limit:
                    raise BudgetExceededError(
                        f"lattice exceeds limit {limit} (partial count {len(found)})"
                    )
    return sorted(found, key=Subspace.sort_key)


def all_lie_ideals(
    r: Algebra, limit: int = DEFAULT_LIMIT, budget: int = DEFAULT_BUDGET
) -> list[Subspace]:
    """The complete list of Lie ideals, sorted by (dim, basis bytes)."""
    key = ("all_lie_ideals", limit, budget)
    if key not in r._cache:
        r._cache[key] = _closure_lattice(r, lie_ideal_closure, limit, budget)
    return r._cache[key]


def all_ideals(
    r: Algebra, limit: int = DEFAULT_LIMIT, budget: int = DEFAULT_BUDGET
) -> list[Subspace]:
    """The complete list of two-sided ideals, sorted by (dim, basis bytes)."""
    key = ("all_ideals", limit, budget)
    if key not in r._cache:
        r._cache[key] = _closure_lattice(r, ideal_generated, limit, budget)
    return r._cache[key]


def contains_nonzero_ideal(r: Algebra, s: Subspace) -> Subspace | None:
    """The maximal nonzero ideal inside s, or None.

    For a simple algebra this degenerates to the test s = R; otherwise the
    complete ideal lattice is scanned (the sum of all contained ideals is
    itself a contained ideal, so a unique maximal one exists).
    """
    from .classify import is_simple

    if is_simple(r):
        return r.full_space() if s == r.full_space() else None
    best = None
    for i in all_ideals(r):
        if not i.is_zero() and subspace_leq(i, s):
            if best is None or i.dim > best.dim:
                best = i
    return best


def all_subspaces(field: GF, n: int) -> Iterator[Subspace]:
    """Brute-force enumeration of every subspace of GF(p)^n, by iterating
    all reduced row echelon matrices.  Independent oracle for the
    closure-based enumerators."""
    p = field.p
    yield Subspace.zero(field, n)
    for k in range(1, n + 1):
        for pivots in combinations(range(n), k):
            pivot_set = set(pivots)
            free = [
                (row, col)
                for row in range(k)
                for col in range(pivots[row] + 1, n)
                if col not in pivot_set
            ]
            for vals in product(range(p), repeat=len(free)):
                mat = np.zeros((k, n), dtype=np.int64)
                for row in range(k):
                    mat[row, pivots[row]] = 1
                for (row, col), v in zip(free, vals):
                    mat[row, col] = v
                yield Subspace(field, n, mat, pivots)
