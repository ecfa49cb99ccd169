"""Both row-reduction backends must compute identical canonical forms."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieideals import _rowreduce_py, kernels

try:
    from lieideals import _rowreduce_c
except ImportError:
    _rowreduce_c = None

needs_c = pytest.mark.skipif(_rowreduce_c is None, reason="compiled kernel not built")

PRIMES = [2, 3, 5, 7, 11]


def matrices(max_dim=6):
    return st.tuples(
        st.sampled_from(PRIMES),
        st.integers(0, max_dim),
        st.integers(1, max_dim),
        st.integers(0, 2**32 - 1),
    )


def _random_matrix(p, m, n, seed):
    rng = np.random.default_rng(seed)
    return rng.integers(0, p, size=(m, n), dtype=np.int64)


def test_rref_known():
    rows, pivots = _rowreduce_py.rref(np.array([[2, 4], [1, 3]]), 5)
    assert pivots == [0, 1]
    assert (rows == np.eye(2, dtype=np.int64)).all()


def test_rref_zero_matrix():
    rows, pivots = _rowreduce_py.rref(np.zeros((3, 4), dtype=np.int64), 3)
    assert rows.shape == (0, 4)
    assert pivots == []


def test_rref_idempotent():
    mat = _random_matrix(3, 5, 4, 7)
    rows, pivots = _rowreduce_py.rref(mat, 3)
    rows2, pivots2 = _rowreduce_py.rref(rows, 3)
    assert (rows == rows2).all() and pivots == pivots2


@needs_c
@settings(max_examples=200, deadline=None)
@given(matrices())
def test_backends_agree_rref(params):
    p, m, n, seed = params
    mat = _random_matrix(p, m, n, seed)
    rows_py, piv_py = _rowreduce_py.rref(mat, p)
    rows_c, piv_c = _rowreduce_c.rref(mat, p)
    assert piv_py == list(piv_c)
    assert (rows_py == rows_c).all()


@needs_c
@settings(max_examples=100, deadline=None)
@given(matrices())
def test_backends_agree_reduce_rows(params):
    p, m, n, seed = params
    mat = _random_matrix(p, m, n, seed)
    basis, pivots = _rowreduce_py.rref(mat, p)
    probe = _random_matrix(p, 4, n, seed + 1)
    res_py = _rowreduce_py.reduce_rows(basis, pivots, probe, p)
    res_c = _rowreduce_c.reduce_rows(
        basis, np.asarray(pivots, dtype=np.int64), probe, p
    )
    assert (res_py == res_c).all()


def test_reduce_rows_membership():
    # rows inside the span reduce to zero, rows outside do not
    basis, pivots = _rowreduce_py.rref(np.array([[1, 0, 1], [0, 1, 1]]), 2)
    inside = np.array([[1, 1, 0]])
    outside = np.array([[1, 0, 0]])
    assert not _rowreduce_py.reduce_rows(basis, pivots, inside, 2).any()
    assert _rowreduce_py.reduce_rows(basis, pivots, outside, 2).any()


def test_selected_backend_env(monkeypatch):
    assert kernels.BACKEND in ("python", "cython")
    rows, piv = kernels.rref(np.array([[1, 2], [2, 4]]), 5)
    assert len(piv) == 1
