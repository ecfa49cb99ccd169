"""Exact linear algebra over prime fields GF(p).

Subspaces are held in reduced row echelon form, which is canonical:
two subspaces are equal as sets iff their basis matrices are identical.
Over a prime field, additive subgroups coincide with subspaces, so this
module is the substrate for every additive-subgroup computation.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import DimensionMismatchError, FieldMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class GF:
    """The prime field GF(p); the scalar domain of all computations."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = int(p)

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def as_vector(coords: Sequence[int] | np.ndarray, p: int) -> np.ndarray:
    v = np.asarray(coords, dtype=np.int64) % p
    if v.ndim != 1:
        raise DimensionMismatchError("vector must be one-dimensional")
    return v


class Subspace:
    """A GF(p)-subspace of GF(p)^n in canonical RREF form.

    Immutable; equality and hashing go through the basis bytes, so
    subspace equality is a byte comparison.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots", "_key")

    def __init__(self, field: GF, ambient_dim: int, basis: np.ndarray, pivots: Sequence[int]):
        # internal: basis is assumed canonical; use span() to construct
        self.field = field
        self.ambient_dim = int(ambient_dim)
        b = np.ascontiguousarray(basis, dtype=np.int64)
        b.setflags(write=False)
        self.basis = b
        self.pivots = tuple(int(c) for c in pivots)
        self._key = (field.p, self.ambient_dim, b.tobytes())

    @classmethod
    def zero(cls, field: GF, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, np.zeros((0, ambient_dim), dtype=np.int64), ())

    @classmethod
    def full(cls, field: GF, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, np.eye(ambient_dim, dtype=np.int64), range(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def is_zero(self) -> bool:
        return self.dim == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Subspace) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __le__(self, other: "Subspace") -> bool:
        return subspace_leq(self, other)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __repr__(self) -> str:
        rows = ";".join(",".join(str(x) for x in row) for row in self.basis.tolist())
        return f"Subspace(GF({self.field.p})^{self.ambient_dim}, dim={self.dim}, [{rows}])"

    def sort_key(self) -> tuple:
        return (self.dim, self.basis.tobytes())

    def element_count(self) -> int:
        return self.field.p ** self.dim


def span_rows(field: GF, rows: np.ndarray, ambient_dim: int) -> Subspace:
    """Canonical span of the rows of a matrix (fast path, no checks)."""
    if rows.shape[0] == 0:
        return Subspace.zero(field, ambient_dim)
    basis, pivots = kernels.rref(rows, field.p)
    return Subspace(field, ambient_dim, basis, pivots)


def span(field: GF, vectors: Iterable[Sequence[int] | np.ndarray], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    vecs = [as_vector(v, field.p) for v in vectors]
    for v in vecs:
        if v.shape[0] != ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {v.shape[0]} in ambient dimension {ambient_dim}"
            )
    if not vecs:
        return Subspace.zero(field, ambient_dim)
    return span_rows(field, np.vstack(vecs), ambient_dim)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient {a.ambient_dim} vs {b.ambient_dim}")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """Smallest subspace containing both operands."""
    _check_ambient(a, b)
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return span_rows(a.field, np.vstack([a.basis, b.basis]), a.ambient_dim)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Set-theoretic intersection, via the Zassenhaus block trick."""
    _check_ambient(a, b)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.field, a.ambient_dim)
    n = a.ambient_dim
    top = np.hstack([a.basis, a.basis])
    bot = np.hstack([b.basis, np.zeros_like(b.basis)])
    reduced, pivots = kernels.rref(np.vstack([top, bot]), a.field.p)
    rows = [reduced[i, n:] for i, c in enumerate(pivots) if c >= n]
    return span(a.field, rows, n)


def contains(a: Subspace, v: Sequence[int] | np.ndarray) -> bool:
    """Exact membership test by reduction against the RREF basis."""
    w = as_vector(v, a.field.p)
    if w.shape[0] != a.ambient_dim:
        raise DimensionMismatchError(f"vector length {w.shape[0]} vs ambient {a.ambient_dim}")
    if a.is_zero():
        return not w.any()
    res = kernels.reduce_rows(a.basis, np.asarray(a.pivots, dtype=np.int64), w[None, :], a.field.p)
    return not res.any()


def contains_rows(a: Subspace, rows: np.ndarray) -> np.ndarray:
    """Vectorized membership: boolean per row."""
    if rows.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    if a.is_zero():
        return ~(rows % a.field.p).any(axis=1)
    res = kernels.reduce_rows(a.basis, np.asarray(a.pivots, dtype=np.int64), rows, a.field.p)
    return ~res.any(axis=1)


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    """Inclusion test a <= b."""
    _check_ambient(a, b)
    if a.is_zero():
        return True
    if a.dim > b.dim:
        return False
    return bool(contains_rows(b, a.basis).all())


def nullspace(field: GF, mat: np.ndarray) -> Subspace:
    """Solution space of M x = 0, as a subspace of GF(p)^n."""
    m = np.asarray(mat, dtype=np.int64) % field.p
    if m.ndim != 2:
        raise DimensionMismatchError("matrix must be two-dimensional")
    n = m.shape[1]
    reduced, pivots = kernels.rref(m, field.p)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    rows = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-reduced[r, f]) % field.p
        rows.append(v)
    return span(field, rows, n)


def solve(field: GF, mat: np.ndarray, rhs: np.ndarray) -> np.ndarray | None:
    """One solution of M x = b over GF(p), or None if inconsistent."""
    m = np.asarray(mat, dtype=np.int64) % field.p
    b = as_vector(rhs, field.p)
    n = m.shape[1]
    aug = np.hstack([m, b[:, None]])
    reduced, pivots = kernels.rref(aug, field.p)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = reduced[r, n]
    return x


def all_elements(s: Subspace) -> np.ndarray:
    """All p^dim elements of a subspace as rows, in coefficient order."""
    p, k, n = s.field.p, s.dim, s.ambient_dim
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    coeffs = np.array(list(product(range(p), repeat=k)), dtype=np.int64)
    return (coeffs @ s.basis) % p


def iter_elements(s: Subspace) -> Iterator[np.ndarray]:
    for row in all_elements(s):
        yield row
