"""Tests for the sparse rational linear algebra kernel."""

import random
from fractions import Fraction

import pytest

from weilcoh.linalg import (
    Eliminator,
    ResourceCapError,
    SparseRationalMatrix,
    kernel_basis,
    rank,
    span_intersect_window,
    windowed_span_dim,
)


def dense_rank_oracle(rows, ncols):
    """Independent rank computation: plain Gaussian elimination over
    Fraction on dense row lists."""
    mat = [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]
    rk = 0
    col = 0
    nrows = len(mat)
    while rk < nrows and col < ncols:
        piv = None
        for i in range(rk, nrows):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        lead = mat[rk][col]
        for i in range(rk + 1, nrows):
            if mat[i][col]:
                f = mat[i][col] / lead
                for j in range(col, ncols):
                    mat[i][j] -= f * mat[rk][j]
        rk += 1
        col += 1
    return rk


def from_dense(rows):
    m = SparseRationalMatrix(len(rows), len(rows[0]) if rows else 0)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            m.set(i, j, v)
    return m


def test_rank_identity():
    m = from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert rank(m) == 3


def test_rank_proportional_rows():
    assert rank(from_dense([[1, 2], [2, 4]])) == 1


def test_rank_empty():
    assert rank(SparseRationalMatrix(0, 0)) == 0
    assert rank(SparseRationalMatrix(3, 4)) == 0


def test_rank_random_vs_dense_oracle():
    rng = random.Random(12345)
    for trial in range(25):
        rows = [
            {j: rng.randint(-5, 5) for j in range(8) if rng.random() < 0.6}
            for _ in range(6)
        ]
        rows = [{j: v for j, v in r.items() if v} for r in rows]
        m = SparseRationalMatrix(6, 8)
        for i, r in enumerate(rows):
            for j, v in r.items():
                m.set(i, j, v)
        assert rank(m) == dense_rank_oracle(rows, 8), "trial %d" % trial


def test_rank_transpose_and_scaling_invariance():
    rng = random.Random(99)
    for _ in range(10):
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(7)]
        m = from_dense(rows)
        assert rank(m) == rank(m.transpose())
        # scale a row by a nonzero rational, permute rows
        scaled = [list(r) for r in rows]
        scaled[2] = [Fraction(7, 3) * v for v in scaled[2]]
        scaled.reverse()
        assert rank(from_dense(scaled)) == rank(m)


def test_kernel_identity_empty():
    assert kernel_basis(from_dense([[1, 0], [0, 1]])) == []


def test_kernel_zero_matrix():
    vs = kernel_basis(SparseRationalMatrix(2, 3))
    assert len(vs) == 3


def test_kernel_multiply_back():
    m = from_dense([[1, 1, 0]])
    vs = kernel_basis(m)
    assert len(vs) == 2
    for v in vs:
        assert all(x == 0 for x in m.mul_vector(v))


def test_kernel_random_rank_nullity():
    rng = random.Random(4)
    for _ in range(15):
        rows = [[rng.randint(-4, 4) for _ in range(7)] for _ in range(5)]
        m = from_dense(rows)
        vs = kernel_basis(m)
        assert len(vs) == 7 - rank(m)
        for v in vs:
            assert all(x == 0 for x in m.mul_vector(v))
        # independence of the kernel vectors themselves
        kr = from_dense([[x for x in v] for v in vs]) if vs else None
        if kr is not None:
            assert rank(kr) == len(vs)


def test_windowed_span_trivial():
    vecs = [{0: 1}, {1: 1}]
    assert windowed_span_dim(vecs, lambda c: c == 0) == 1
    assert windowed_span_dim([{0: 1, 1: 1}], lambda c: c == 0) == 0


def test_windowed_span_full_window_is_rank():
    rng = random.Random(7)
    for _ in range(10):
        vecs = [
            {j: rng.randint(-3, 3) for j in range(6) if rng.random() < 0.7}
            for _ in range(4)
        ]
        vecs = [{j: v for j, v in r.items() if v} for r in vecs]
        assert windowed_span_dim(vecs, lambda c: True) == dense_rank_oracle(vecs, 6)


def test_windowed_span_random_vs_bruteforce():
    # brute force: eliminate out-of-window coordinates first, count rows
    # that end up supported purely inside the window
    rng = random.Random(2024)
    for _ in range(20):
        vecs = [
            {j: rng.randint(-3, 3) for j in range(5) if rng.random() < 0.8}
            for _ in range(5)
        ]
        vecs = [{j: v for j, v in r.items() if v} for r in vecs]
        window = {j for j in range(5) if rng.random() < 0.5}
        got = windowed_span_dim(vecs, lambda c: c in window)
        # oracle: rank of all vectors minus rank of out-of-window projections
        # computed with the dense routine
        full = dense_rank_oracle(vecs, 5)
        outside = dense_rank_oracle(
            [{j: v for j, v in r.items() if j not in window} for r in vecs], 5
        )
        assert got == full - outside


def test_span_intersect_window_basis():
    rng = random.Random(31)
    for _ in range(20):
        vecs = [
            {j: rng.randint(-3, 3) for j in range(6) if rng.random() < 0.7}
            for _ in range(5)
        ]
        vecs = [{j: v for j, v in r.items() if v} for r in vecs]
        window = {j for j in range(6) if rng.random() < 0.6}
        basis = span_intersect_window(vecs, lambda c: c in window)
        assert len(basis) == windowed_span_dim(vecs, lambda c: c in window)
        span = Eliminator()
        for v in vecs:
            span.add_row(v)
        for b in basis:
            assert all(c in window for c in b)
            assert span.contains(b)


def test_structured_column_labels():
    # column labels need only be sortable, not integers
    vecs = [{("a", 2): 1, ("b", 1): 2}, {("a", 2): 2, ("b", 1): 4}]
    e = Eliminator()
    for v in vecs:
        e.add_row(v)
    assert e.rank == 1


def test_resource_cap():
    m = SparseRationalMatrix(4, 4)
    for i in range(4):
        for j in range(4):
            m.set(i, j, i * 7 + j + 1 + (i == j))
    with pytest.raises(ResourceCapError):
        rank(m, max_entries=3)


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("WEILCOH_MAX_ENTRIES", "2")
    m = from_dense([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    with pytest.raises(ResourceCapError):
        rank(m)
    monkeypatch.setenv("WEILCOH_MAX_ENTRIES", "1000")
    assert rank(m) == 3
