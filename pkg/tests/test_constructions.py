from __future__ import annotations

import itertools

import numpy as np
import pytest

from foldedcodes import fqmat, poly
from foldedcodes.code import min_distance, weight_counts
from foldedcodes.constructions import (
    ModuliSet,
    binary_long_code,
    crt_map,
    irreducible_moduli,
    pi_code,
    qmds_subcode,
    random_coprime_moduli,
    repetition_dual_code,
    split_moduli,
    subset_order,
    subset_vectors,
)
from foldedcodes.errors import DomainError
from foldedcodes.gf import GF
from foldedcodes.qmds import classify

from conftest import brute_span


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_subset_vectors_vanish_only_on_their_subset(r):
    for I in subset_order(r):
        u = subset_vectors(I, r)
        for size in range(1, r + 2):
            for J in itertools.combinations(range(r + 1), size):
                total = [sum(u[i][j] for i in J) % 2 for j in range(r)]
                assert (not any(total)) == (J == I)


def test_subset_order_is_bitmask_order():
    assert subset_order(1) == [(0,), (1,), (0, 1)]
    assert len(subset_order(3)) == 15


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_binary_long_code(r):
    c = binary_long_code(r)
    n = 2 ** (r + 1) - 1
    res = classify(c)
    assert res.type_str == f"[{n},{r},{r + 1},{n - 1}]"
    assert res.is_dually_qmds
    A = weight_counts(c)
    assert A[n - 1] == 2 ** (r + 1) - 1 and sum(A[1:]) == A[n - 1]


def test_binary_long_code_r2_matches_example_type():
    assert str(classify(binary_long_code(2))) == "dually-QMDS [7,2,3,6]"


def test_crt_map_is_remainders():
    F = GF(5)
    M = ModuliSet(F, ((1, 0, 1), (2, 1, 1)))
    f = [3, 1, 4, 1]
    out = crt_map(M, f)
    assert out[:2] == (poly.mod(F, f, [1, 0, 1]) + [0, 0])[:2]
    assert out[2:] == (poly.mod(F, f, [2, 1, 1]) + [0, 0])[:2]


def test_pi_code_is_image_of_crt_map():
    F = GF(3)
    M = split_moduli(F, 1, 3)
    c = pi_code(F, M, 2)
    image = {tuple(crt_map(M, list(f))) for f in itertools.product(range(3), repeat=2)}
    assert brute_span(c) == image


def test_moduli_validation():
    F = GF(5)
    with pytest.raises(DomainError):
        ModuliSet(F, ((1, 1), (1, 1)))  # not coprime
    with pytest.raises(DomainError):
        ModuliSet(F, ((1, 2),))  # not monic
    with pytest.raises(DomainError):
        ModuliSet(F, ((1, 1), (1, 0, 1)))  # degrees differ
    with pytest.raises(DomainError):
        split_moduli(F, 3, 2)  # rn > q
    with pytest.raises(DomainError):
        pi_code(F, split_moduli(F, 2, 2), 5)


@pytest.mark.parametrize("q", [4, 5, 7])
def test_split_moduli_codes_are_dually_qmds(q):
    F = GF(q)
    for r, n in [(1, 3), (2, 2)]:
        for mode in ("distinct", "repeated"):
            M = split_moduli(F, r, n, mode)
            for k in range(1, r * n):
                assert classify(pi_code(F, M, k)).is_dually_qmds


def test_pi_code_with_block_matrices_stays_dually_qmds(rng):
    F = GF(7)
    M = split_moduli(F, 2, 3)
    blocks = [fqmat.random_invertible(F, 2, rng) for _ in range(3)]
    assert classify(pi_code(F, M, 3, blocks)).is_dually_qmds
    with pytest.raises(DomainError):
        pi_code(F, M, 3, blocks[:2])


def test_coprime_and_irreducible_moduli_are_qmds(rng):
    F = GF(5)
    for M in (irreducible_moduli(F, 2, 3), random_coprime_moduli(F, 2, 3, rng)):
        for k in range(1, 6):
            assert classify(pi_code(F, M, k)).is_qmds


def test_qmds_subcode():
    F = GF(7)
    c = pi_code(F, split_moduli(F, 3, 2), 5)
    sub = qmds_subcode(c, 4)
    assert sub.k == 4 and min_distance(sub) == min_distance(c) and classify(sub).is_qmds
    with pytest.raises(DomainError):
        qmds_subcode(c, 3)  # outside (r(ceil(k/r)-1), k) = (3, 5)


def test_repetition_dual_code():
    for q, n, r in [(2, 3, 2), (3, 4, 1), (5, 2, 3)]:
        c = repetition_dual_code(n, r, GF(q))
        res = classify(c)
        assert res.label == "MDS" and (res.k, res.d) == (r * (n - 1), 2)
