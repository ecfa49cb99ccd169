"""Finite-dimensional associative algebras over GF(p) via structure constants.

An algebra is a dense table c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
Associativity is checked on all basis triples at construction and extends
to all elements by bilinearity; construction fails loudly rather than
repairing a bad table.
"""

from __future__ import annotations

import json
from typing import Sequence

import numpy as np

from .errors import (
    AlgebraMismatchError,
    AssociativityError,
    DimensionMismatchError,
    FieldMismatchError,
    InvalidDefinitionError,
)
from .finite_linalg import GF, Subspace, as_vector, is_prime, solve


class Algebra:
    """An associative GF(p)-algebra given by structure constants."""

    def __init__(self, name: str, field: GF, table: np.ndarray, check: bool = True):
        self.name = name
        self.field = field
        t = np.ascontiguousarray(np.asarray(table, dtype=np.int64) % field.p)
        if t.ndim != 3 or t.shape[0] != t.shape[1] or t.shape[1] != t.shape[2] or t.shape[0] < 1:
            raise InvalidDefinitionError(f"table must be d x d x d with d >= 1, got {t.shape}")
        t.setflags(write=False)
        self.table = t
        self.dim = t.shape[0]
        if check:
            self._check_associativity()
        self.unity: Element | None = self._find_unity()
        self._cache: dict = {}

    def _check_associativity(self) -> None:
        t = self.table
        p = self.field.p
        left = np.einsum("ijm,mkl->ijkl", t, t) % p
        right = np.einsum("jkm,iml->ijkl", t, t) % p
        diff = left != right
        if diff.any():
            i, j, k, _ = np.argwhere(diff)[0]
            raise AssociativityError((int(i), int(j), int(k)))

    def _find_unity(self) -> "Element | None":
        # u with u*e_i = e_i*u = e_i for all i: linear system in u
        d, t, p = self.dim, self.table, self.field.p
        left = np.transpose(t, (1, 2, 0)).reshape(d * d, d)  # rows (i,k): coeff of u_j is t[j,i,k]
        right = np.transpose(t, (0, 2, 1)).reshape(d * d, d)  # rows (i,k): coeff of u_j is t[i,j,k]
        rhs = np.eye(d, dtype=np.int64).reshape(d * d)
        mat = np.vstack([left, right])
        b = np.concatenate([rhs, rhs])
        u = solve(self.field, mat, b)
        return Element(self, u) if u is not None else None

    # -- elements ---------------------------------------------------------

    def element(self, coords: Sequence[int] | np.ndarray) -> "Element":
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return Element(self, v)

    def zero(self) -> "Element":
        return Element(self, np.zeros(self.dim, dtype=np.int64))

    def mul_coords(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", a, b, self.table) % self.field.p

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def is_commutative(self) -> bool:
        return bool((self.table == np.transpose(self.table, (1, 0, 2))).all())

    def is_unital(self) -> bool:
        return self.unity is not None

    def all_element_coords(self) -> np.ndarray:
        """All p^dim coordinate vectors; guard callers with a budget."""
        from .finite_linalg import all_elements

        return all_elements(self.full_space())

    # -- serialization ----------------------------------------------------

    def to_definition(self) -> dict:
        """Canonical JSON-ready definition (sorted sparse table entries)."""
        entries = [
            [int(i), int(j), int(k), int(c)]
            for (i, j, k), c in np.ndenumerate(self.table)
            if c != 0
        ]
        return {
            "name": self.name,
            "prime": self.field.p,
            "dim": self.dim,
            "table": entries,
        }

    @classmethod
    def from_definition(cls, data: dict) -> "Algebra":
        try:
            name = str(data["name"])
            p = int(data["prime"])
            dim = int(data["dim"])
            raw = data["table"]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDefinitionError(f"bad algebra definition: {exc}") from exc
        if not is_prime(p):
            raise InvalidDefinitionError(f"prime field modulus {p} is not prime")
        if dim < 1:
            raise InvalidDefinitionError(f"dim must be >= 1, got {dim}")
        table = np.zeros((dim, dim, dim), dtype=np.int64)
        seen = set()
        for entry in raw:
            if len(entry) != 4:
                raise InvalidDefinitionError(f"table entry must be [i,j,k,c]: {entry}")
            i, j, k, c = (int(x) for x in entry)
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise InvalidDefinitionError(f"index out of range in entry {entry}")
            if (i, j, k) in seen:
                raise InvalidDefinitionError(f"duplicate table entry ({i},{j},{k})")
            seen.add((i, j, k))
            table[i, j, k] = c % p
        return cls(name, GF(p), table)

    @classmethod
    def from_json_file(cls, path: str) -> "Algebra":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidDefinitionError(f"cannot load {path}: {exc}") from exc
        return cls.from_definition(data)

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, GF({self.field.p}), dim={self.dim})"


class Element:
    """An element of an algebra: a coordinate vector over the basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords: Sequence[int] | np.ndarray):
        v = as_vector(coords, algebra.field.p)
        if v.shape[0] != algebra.dim:
            raise DimensionMismatchError(
                f"coords length {v.shape[0]} vs algebra dim {algebra.dim}"
            )
        v = np.ascontiguousarray(v)
        v.setflags(write=False)
        self.algebra = algebra
        self.coords = v

    def _check(self, other: "Element") -> None:
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.coords + other.coords)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.coords - other.coords)

    def __neg__(self) -> "Element":
        return Element(self.algebra, -self.coords)

    def __mul__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.algebra.mul_coords(self.coords, other.coords))

    def scale(self, c: int) -> "Element":
        return Element(self.algebra, self.coords * (c % self.algebra.field.p))

    def bracket(self, other: "Element") -> "Element":
        """The additive commutator ab - ba."""
        return self * other - other * self

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and bool((self.coords == other.coords).all())
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.coords.tobytes()))

    def __repr__(self) -> str:
        return f"Element({self.algebra.name}, {self.coords.tolist()})"


def multiply(a: Element, b: Element) -> Element:
    return a * b


def bracket(a: Element, b: Element) -> Element:
    return a.bracket(b)


# -- constructors ----------------------------------------------------------


def matrix_algebra(n: int, p: int) -> Algebra:
    """The full matrix algebra M_n(GF(p)) on the unit basis e_uv."""
    if n < 1:
        raise InvalidDefinitionError(f"matrix size must be >= 1, got {n}")
    field = GF(p)
    d = n * n
    table = np.zeros((d, d, d), dtype=np.int64)
    for u in range(n):
        for v in range(n):
            for w in range(n):
                for x in range(n):
                    if v == w:
                        table[u * n + v, w * n + x, u * n + x] = 1
    return Algebra(f"matrix:{n}:{p}", field, table)


def triangular_algebra(n: int, p: int) -> Algebra:
    """Upper-triangular n x n matrices over GF(p); not semiprime for n >= 2."""
    if n < 1:
        raise InvalidDefinitionError(f"matrix size must be >= 1, got {n}")
    field = GF(p)
    pairs = [(u, v) for u in range(n) for v in range(u, n)]
    index = {uv: i for i, uv in enumerate(pairs)}
    d = len(pairs)
    table = np.zeros((d, d, d), dtype=np.int64)
    for (u, v), i in index.items():
        for (w, x), j in index.items():
            if v == w:
                table[i, j, index[(u, x)]] = 1
    return Algebra(f"triangular:{n}:{p}", field, table)


# -- polynomial helpers for field extensions -------------------------------


def _poly_mod(poly: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of poly modulo a monic polynomial (coefficient lists,
    constant term first; mod has implicit leading coefficient 1)."""
    r = [c % p for c in poly]
    k = len(mod)
    while len(r) > k:
        lead = r[-1]
        if lead:
            for i, m in enumerate(mod):
                r[len(r) - 1 - k + i] = (r[len(r) - 1 - k + i] - lead * m) % p
        r.pop()
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def poly_is_irreducible(min_poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..k/2."""
    k = len(min_poly)
    if k == 0:
        return False
    full = [c % p for c in min_poly] + [1]  # monic of degree k
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        from itertools import product as iproduct

        for lower in iproduct(range(p), repeat=deg):
            divisor = list(lower)  # monic: leading 1 implicit
            rem = _poly_mod(full, divisor, p)
            if all(c == 0 for c in rem):
                return False
    return True


def default_min_poly(p: int, k: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree k over GF(p)."""
    from itertools import product as iproduct

    for lower in iproduct(range(p), repeat=k):
        cand = list(lower)
        if cand[0] == 0:
            continue  # reducible: x divides
        if poly_is_irreducible(cand, p):
            return cand
    raise InvalidDefinitionError(f"no irreducible polynomial of degree {k} over GF({p})")


def field_algebra(p: int, k: int, min_poly: Sequence[int] | None = None) -> Algebra:
    """GF(p^k) as a commutative unital GF(p)-algebra on basis 1, x, ..., x^(k-1).

    min_poly lists the k lower coefficients (constant first) of the monic
    minimal polynomial x^k + sum c_i x^i; it must be irreducible (checked
    by exhaustive factor search, k <= 8).
    """
    field = GF(p)
    if k < 1 or k > 8:
        raise InvalidDefinitionError(f"extension degree must be in 1..8, got {k}")
    if min_poly is None:
        mp = default_min_poly(p, k)
    else:
        mp = [int(c) % p for c in min_poly]
        if len(mp) != k:
            raise InvalidDefinitionError(
                f"min_poly must list the {k} lower coefficients, got {len(mp)}"
            )
        if not poly_is_irreducible(mp, p):
            raise InvalidDefinitionError(f"min_poly {mp} is reducible over GF({p})")
    table = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod = [0] * (i + j) + [1]
            rem = _poly_mod(prod, mp, p)
            for m, c in enumerate(rem):
                table[i, j, m] = c
    return Algebra(f"field:{p}:{k}", field, table)


def tensor_product(a: Algebra, b: Algebra) -> Algebra:
    """Tensor product over the common prime field; basis pairs (i,j)."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    table = np.einsum("ikm,jln->ijklmn", a.table, b.table) % a.field.p
    d = a.dim * b.dim
    return Algebra(f"tensor:{a.name}:{b.name}", a.field, table.reshape(d, d, d))


def direct_sum(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product on the concatenated basis."""
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    d = a.dim + b.dim
    table = np.zeros((d, d, d), dtype=np.int64)
    table[: a.dim, : a.dim, : a.dim] = a.table
    table[a.dim :, a.dim :, a.dim :] = b.table
    return Algebra(f"sum:{a.name}:{b.name}", a.field, table)


def unitization(a: Algebra) -> Algebra:
    """Minimal unitization: a itself if unital, else adjoin a unity.

    The adjoined scalar line is GF(p) rather than the integers; in
    characteristic p the integers act through GF(p), so generated ideals
    are unchanged.
    """
    if a.unity is not None:
        return a
    d = a.dim + 1
    table = np.zeros((d, d, d), dtype=np.int64)
    table[: a.dim, : a.dim, : a.dim] = a.table
    u = a.dim
    table[u, u, u] = 1
    for i in range(a.dim):
        table[u, i, i] = 1
        table[i, u, i] = 1
    return Algebra(f"unitization:{a.name}", a.field, table)


def find_unity(a: Algebra) -> Element | None:
    return a.unity


# -- builtin specifiers -----------------------------------------------------


def _parse_spec_tokens(tokens: list[int | str], pos: int) -> tuple[Algebra, int]:
    if pos >= len(tokens):
        raise InvalidDefinitionError("truncated builtin specifier")
    head = tokens[pos]

    def take_ints(n: int, after: int) -> list[int]:
        vals = tokens[after : after + n]
        if len(vals) != n:
            raise InvalidDefinitionError(f"specifier '{head}' needs {n} integer arguments")
        out = []
        for v in vals:
            try:
                out.append(int(v))
            except (TypeError, ValueError):
                raise InvalidDefinitionError(f"expected integer, got {v!r}") from None
        return out

    if head == "matrix":
        n, p = take_ints(2, pos + 1)
        return matrix_algebra(n, p), pos + 3
    if head == "field":
        p, k = take_ints(2, pos + 1)
        return field_algebra(p, k), pos + 3
    if head == "triangular":
        n, p = take_ints(2, pos + 1)
        return triangular_algebra(n, p), pos + 3
    if head == "tensor":
        left, nxt = _parse_spec_tokens(tokens, pos + 1)
        right, nxt = _parse_spec_tokens(tokens, nxt)
        return tensor_product(left, right), nxt
    if head == "sum":
        left, nxt = _parse_spec_tokens(tokens, pos + 1)
        right, nxt = _parse_spec_tokens(tokens, nxt)
        return direct_sum(left, right), nxt
    raise InvalidDefinitionError(f"unknown builtin specifier '{head}'")


def from_builtin(spec: str) -> Algebra:
    """Parse a builtin specifier like ``matrix:2:2`` or ``tensor:matrix:2:2:field:2:2``."""
    tokens: list[int | str] = spec.split(":")
    try:
        alg, nxt = _parse_spec_tokens(tokens, 0)
    except InvalidDefinitionError:
        raise
    except ValueError as exc:  # e.g. a non-prime modulus
        raise InvalidDefinitionError(f"bad builtin specifier '{spec}': {exc}") from exc
    if nxt != len(tokens):
        raise InvalidDefinitionError(f"trailing tokens in specifier '{spec}'")
    return alg


def load_algebra(spec: str) -> Algebra:
    """Load an algebra from ``builtin:<spec>`` or a JSON definition file."""
    if spec.startswith("builtin:"):
        return from_builtin(spec[len("builtin:") :])
    return Algebra.from_json_file(spec)
