from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldedcodes import fqmat, load_fixture
from foldedcodes.code import (
    Isometry,
    LinearCode,
    apply_isometry,
    codewords,
    dual,
    expand_code,
    folded_weight,
    from_generator,
    load_code,
    min_distance,
    restrict,
    save_code,
    shorten,
    weight_counts,
)
from foldedcodes.errors import BudgetExceededError, DomainError
from foldedcodes.fqmat import MatrixFq
from foldedcodes.gf import GF, FieldExtension, power_basis

from conftest import brute_distance, brute_span, brute_weight, random_code

CONFIGS = [(2, 2, 3), (2, 3, 3), (3, 2, 3), (4, 2, 2), (5, 1, 4)]


@st.composite
def codes(draw, configs=CONFIGS):
    q, r, n = draw(st.sampled_from(configs))
    k = draw(st.integers(1, r * n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_code(GF(q), n, r, k, np.random.default_rng(seed))


def test_folded_weight():
    assert folded_weight([0, 0, 1, 0, 0, 0, 2, 0, 1], 3) == 2
    assert folded_weight([0] * 6, 2) == 0
    with pytest.raises(DomainError):
        folded_weight([1, 0, 1], 2)


@settings(max_examples=60, deadline=None)
@given(codes())
def test_enumeration_matches_brute_force(c):
    words = codewords(c)
    assert {tuple(w) for w in words.tolist()} == brute_span(c)
    counts = weight_counts(c)
    expect = [0] * (c.n + 1)
    for w in brute_span(c):
        expect[brute_weight(w, c.r)] += 1
    assert counts == expect


@settings(max_examples=60, deadline=None)
@given(codes())
def test_distance_methods_agree(c):
    d = brute_distance(c)
    assert min_distance(c, "exhaustive") == d
    assert min_distance(c, "rank_blocks") == d


@settings(max_examples=60, deadline=None)
@given(codes())
def test_dual_is_orthogonal_complement(c):
    D = dual(c)
    assert D.k == c.length - c.k
    if D.k:
        assert not (c.generator @ D.generator.T).entries.any()
        assert dual(D) == c


def test_enumeration_order_is_lexicographic_over_canonical():
    c = load_fixture("dually_qmds_7_2_3")
    words = codewords(c).tolist()
    G = c.canonical.entries.tolist()
    for i, msg in enumerate(itertools.product(range(2), repeat=c.k)):
        w = [sum(a * g for a, g in zip(msg, col)) % 2 for col in zip(*G)]
        assert words[i] == w


def test_budget_is_enforced():
    c = random_code(GF(5), 4, 2, 8, np.random.default_rng(0))
    with pytest.raises(BudgetExceededError):
        weight_counts(c, budget=1000)
    with pytest.raises(BudgetExceededError):
        min_distance(c, "exhaustive", budget=1000)
    assert min_distance(c, "rank_blocks") >= 1


def test_generator_validation():
    F = GF(2)
    with pytest.raises(DomainError):
        from_generator(F, 2, 2, [[1, 0, 1, 0], [1, 0, 1, 0]])
    with pytest.raises(DomainError):
        from_generator(F, 2, 2, [[1, 0, 1]])


def test_zero_code():
    c = LinearCode.zero(GF(3), 3, 2)
    assert c.k == 0 and min_distance(c) is None
    assert weight_counts(c) == [1, 0, 0, 0]
    assert dual(c) == LinearCode.full(GF(3), 3, 2)


def test_equality_is_by_row_space(rng):
    F = GF(4)
    c = random_code(F, 3, 2, 3, rng)
    T = fqmat.random_invertible(F, 3, rng)
    assert LinearCode(F, 3, 2, T @ c.generator) == c


def test_json_roundtrip(tmp_path):
    for name in ("qmds_3_3_4", "qmds_9_2_13"):
        c = load_fixture(name)
        save_code(c, tmp_path / "c.json")
        d = load_code(tmp_path / "c.json")
        assert d == c and d.generator == c.generator


# -- restriction / shortening ------------------------------------------------


@settings(max_examples=50, deadline=None)
@given(codes(), st.data())
def test_restrict_and_shorten_match_brute_force(c, data):
    I = sorted(data.draw(st.sets(st.integers(0, c.n - 1), min_size=1)))
    words = brute_span(c)
    r = c.r

    def proj(w):
        return tuple(x for i in I for x in w[i * r : (i + 1) * r])

    restricted = {proj(w) for w in words}
    outside = [i for i in range(c.n) if i not in I]
    shortened = {proj(w) for w in words if not any(w[i * r + j] for i in outside for j in range(r))}
    assert brute_span(restrict(c, I)) == restricted
    assert brute_span(shorten(c, I)) == shortened


def test_fixture_restriction_dimensions():
    # restriction to block 2 and shortening to blocks {0, 1} both have dimension 2
    c = load_fixture("qmds_3_3_4")
    assert restrict(c, [2]).k == 2
    assert shorten(c, [0, 1]).k == 2


def test_empty_subset_rejected():
    c = load_fixture("qmds_3_3_4")
    with pytest.raises(DomainError):
        restrict(c, [])
    with pytest.raises(DomainError):
        shorten(c, [5])


# -- isometries ----------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(codes(), st.integers(0, 2**32 - 1))
def test_isometry_preserves_weights(c, seed):
    rng = np.random.default_rng(seed)
    iso = Isometry.random(c.field, c.n, c.r, rng)
    c2 = apply_isometry(c, iso)
    assert weight_counts(c2) == weight_counts(c)
    assert apply_isometry(c2, iso.inverse()) == c
    assert dual(c2) == apply_isometry(dual(c), iso.dual())
    assert iso.transpose().matrix() == iso.matrix().T
    for w in codewords(c)[:5].tolist():
        assert folded_weight(iso.apply(w), c.r) == folded_weight(w, c.r)


def test_isometry_validation_and_json():
    F = GF(3)
    A = MatrixFq(F, [[1, 1], [0, 1]])
    with pytest.raises(DomainError):
        Isometry((0, 0), (A, A))
    with pytest.raises(DomainError):
        Isometry((0, 1), (A, MatrixFq(F, [[1, 1], [1, 1]])))
    iso = Isometry((1, 0), (A, A.T))
    assert Isometry.from_json(F, iso.to_json()) == iso


# -- expansion ------------------------------------------------------------------


def _rs_generator(F, n, k):
    return MatrixFq(F, [[F.pow(a, i) for a in range(1, n + 1)] for i in range(k)])


@pytest.mark.parametrize("q,r,n,k", [(2, 2, 3, 2), (2, 2, 3, 1), (3, 2, 5, 3), (2, 3, 5, 2)])
def test_expanded_mds_code_is_folded_mds(q, r, n, k):
    """An [n, k] Reed-Solomon code over F_{q^r} expands to type [n, r, rk, n-k+1]."""
    base = GF(q)
    big = GF(q**r)
    basis = power_basis(FieldExtension(big, base))
    c = expand_code(_rs_generator(big, n, k), basis)
    assert (c.n, c.r, c.k) == (n, r, r * k)
    assert min_distance(c) == n - k + 1


@pytest.mark.parametrize("q,r,n,k", [(2, 2, 3, 2), (3, 2, 4, 1), (2, 3, 4, 2)])
def test_expansion_commutes_with_duality_via_dual_basis(q, r, n, k):
    base, big = GF(q), GF(q**r)
    basis = power_basis(FieldExtension(big, base))
    G = _rs_generator(big, n, k)
    H = fqmat.kernel_basis(G)
    assert expand_code(H, basis.dual) == dual(expand_code(G, basis))
