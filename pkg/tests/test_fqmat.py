from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldedcodes import fqmat
from foldedcodes.errors import DomainError
from foldedcodes.fqmat import MatrixFq
from foldedcodes.gf import GF

from conftest import brute_rank


@st.composite
def small_matrices(draw, qs=(2, 3, 4, 5)):
    q = draw(st.sampled_from(qs))
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 5))
    entries = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=cols, max_size=cols), min_size=rows, max_size=rows))
    return MatrixFq(GF(q), entries)


@settings(max_examples=150, deadline=None)
@given(small_matrices())
def test_rank_matches_span_size(m):
    assert fqmat.rank(m) == brute_rank(m.field, m.entries.tolist())


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_kernel_is_annihilator_of_right_dimension(m):
    K = fqmat.kernel_basis(m)
    assert K.rows == m.cols - fqmat.rank(m)
    if K.rows:
        assert not (m @ K.T).entries.any()
        assert fqmat.rank(K) == K.rows


@settings(max_examples=100, deadline=None)
@given(small_matrices())
def test_rref_shape(m):
    res = fqmat.rref_rank(m)
    R = res.rref.entries
    for i, c in enumerate(res.pivot_cols):
        assert R[i, c] == 1
        assert sum(1 for x in R[:, c] if x) == 1
    assert fqmat.same_row_space(res.rref.select_rows(range(res.rank)), m) or res.rank == 0


def test_gf2_fast_path_agrees_with_generic():
    rng = np.random.default_rng(3)
    F = GF(2)
    for _ in range(100):
        a = rng.integers(0, 2, size=(int(rng.integers(1, 12)), int(rng.integers(1, 70))))
        res = fqmat.rref_rank(MatrixFq(F, a))
        assert fqmat.rank(MatrixFq(F, a)) == res.rank


def test_inverse_and_solve(rng):
    for q in (2, 3, 4, 7, 9):
        F = GF(q)
        A = fqmat.random_invertible(F, 4, rng)
        assert fqmat.inverse(A) @ A == fqmat.identity(F, 4)
        H = fqmat.random_full_rank(F, 3, 6, rng)
        X = fqmat.random_matrix(F, 2, 3, rng)
        assert fqmat.solve_left(H, X @ H) @ H == X @ H


def test_solve_left_inconsistent():
    F = GF(2)
    a = MatrixFq(F, [[1, 0, 0]])
    with pytest.raises(DomainError):
        fqmat.solve_left(a, MatrixFq(F, [[0, 1, 0]]))


def test_singular_inverse_rejected():
    F = GF(3)
    with pytest.raises(DomainError):
        fqmat.inverse(MatrixFq(F, [[1, 2], [2, 1]]))


def test_block_submatrix_and_stacking():
    F = GF(5)
    m = MatrixFq(F, np.arange(12).reshape(2, 6) % 5)
    # block indices form a set: taken in ascending order
    sub = fqmat.block_submatrix(m, [2, 0], 2)
    assert sub.entries.tolist() == [[0, 1, 4, 0], [1, 2, 0, 1]]
    assert fqmat.hstack([m, m]).shape == (2, 12)
    assert fqmat.vstack([m, m]).shape == (4, 6)
    bd = fqmat.block_diag([fqmat.identity(F, 2), fqmat.identity(F, 1)])
    assert bd == fqmat.identity(F, 3)


def test_entries_are_read_only_and_validated():
    F = GF(3)
    m = MatrixFq(F, [[1, 2]])
    with pytest.raises(ValueError):
        m.entries[0, 0] = 0
    with pytest.raises(DomainError):
        MatrixFq(F, [[3]])


def test_json_roundtrip():
    F = GF(8)
    m = MatrixFq(F, [[1, 7, 3], [0, 5, 2]])
    assert MatrixFq.from_json(F, m.to_json()) == m
