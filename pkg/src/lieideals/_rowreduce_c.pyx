# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled row-reduction kernel over GF(p).

Same interface as ``_rowreduce_py``; selected by ``lieideals.kernels``
when the extension built successfully.
"""

import numpy as np

BACKEND = "cython"


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a is nonzero mod p, p prime
    cdef long long t = 0, newt = 1, r = p, newr = a % p
    cdef long long q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref(mat, long long p):
    """Reduced row echelon form over GF(p); returns (rows, pivots)."""
    A = (np.array(mat, dtype=np.int64, copy=True) % p)
    cdef long long[:, :] a = A
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, coeff, tmp
    pivots = []
    for c in range(n):
        if r == m:
            break
        i = -1
        for j in range(r, m):
            if a[j, c] != 0:
                i = j
                break
        if i < 0:
            continue
        if i != r:
            for k in range(n):
                tmp = a[r, k]
                a[r, k] = a[i, k]
                a[i, k] = tmp
        inv = _inv_mod(a[r, c], p)
        if inv != 1:
            for k in range(n):
                a[r, k] = (a[r, k] * inv) % p
        for j in range(m):
            if j == r:
                continue
            coeff = a[j, c]
            if coeff != 0:
                for k in range(n):
                    a[j, k] = (a[j, k] - coeff * a[r, k]) % p
                    if a[j, k] < 0:
                        a[j, k] += p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def reduce_rows(basis, pivots, rows, long long p):
    """Reduce rows against an RREF basis; zero residue means membership."""
    out = (np.array(rows, dtype=np.int64, copy=True) % p)
    B = np.ascontiguousarray(basis, dtype=np.int64)
    piv = np.ascontiguousarray(pivots, dtype=np.int64)
    cdef long long[:, :] o = out
    cdef const long long[:, :] b = B
    cdef const long long[:] pv = piv
    cdef Py_ssize_t m = o.shape[0], n = o.shape[1], nb = b.shape[0]
    cdef Py_ssize_t i, r, k
    cdef long long coeff
    for i in range(m):
        for r in range(nb):
            coeff = o[i, pv[r]]
            if coeff != 0:
                for k in range(n):
                    o[i, k] = (o[i, k] - coeff * b[r, k]) % p
                    if o[i, k] < 0:
                        o[i, k] += p
    return out
