"""Pure-Python (numpy) row-reduction kernel over GF(p).

Fallback backend for :mod:`lieideals.kernels`; the compiled Cython
backend in ``_rowreduce_c`` implements the same two functions.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``mat`` over GF(p).

    Returns ``(R, pivots)`` where ``R`` contains only the nonzero rows
    (pivots normalized to 1, zeros above and below each pivot) and
    ``pivots`` lists the pivot column of each row.
    """
    A = np.array(mat, dtype=np.int64, copy=True) % p
    m, n = A.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        if inv != 1:
            A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            A[mask] = (A[mask] - np.outer(col[mask], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def reduce_rows(basis: np.ndarray, pivots: np.ndarray, rows: np.ndarray, p: int) -> np.ndarray:
    """Reduce each row of ``rows`` against an RREF ``basis``; residues are
    zero exactly for rows inside the span."""
    out = np.array(rows, dtype=np.int64, copy=True) % p
    for r, c in enumerate(pivots):
        coeff = out[:, c].copy()
        mask = coeff != 0
        if mask.any():
            out[mask] = (out[mask] - np.outer(coeff[mask], basis[r])) % p
    return out
