from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldedcodes import poly
from foldedcodes.errors import DomainError
from foldedcodes.gf import (
    GF,
    FieldExtension,
    FieldSpec,
    OrderedBasis,
    default_modulus,
    dual_basis,
    expand_vector,
    field_create,
    power_basis,
    trace,
    unexpand_vector,
)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 251]


def _poly_mulmod(a, b, p, mod):
    """Schoolbook product of coefficient lists reduced by a monic modulus."""
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    e = len(mod) - 1
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for i in range(e + 1):
                prod[d - e + i] = (prod[d - e + i] - c * mod[i]) % p
    return (prod + [0] * e)[:e]


@pytest.mark.parametrize("q", ORDERS)
def test_multiplication_matches_polynomial_oracle(q):
    F = GF(q)
    rng = np.random.default_rng(q)
    for a, b in rng.integers(0, q, size=(200, 2)).tolist():
        if F.e == 1:
            assert F.mul(a, b) == a * b % q
            assert F.add(a, b) == (a + b) % q
        else:
            expect = _poly_mulmod(list(F.coeffs(a)), list(F.coeffs(b)), F.p, F.modulus)
            assert F.coeffs(F.mul(a, b)) == tuple(expect)


@pytest.mark.parametrize("q", ORDERS)
def test_inverses_and_group_orders(q):
    F = GF(q)
    for a in range(1, min(q, 64)):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
        assert F.pow(a, q - 1) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 8, 9, 16, 27]), st.data())
def test_field_axioms(q, data):
    F = GF(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.sub(F.add(a, b), b) == a


def test_vectorized_ops_agree_with_scalar():
    F = GF(9)
    a = np.arange(9).repeat(9)
    b = np.tile(np.arange(9), 9)
    assert F.mul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.add(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]


def test_default_moduli():
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(2, 3) == (1, 0, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)


def test_field_create_validation():
    with pytest.raises(DomainError):
        field_create(6)
    with pytest.raises(DomainError):
        field_create(2, 2, [1, 0, 1])  # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(DomainError):
        GF(12)
    assert field_create(2, 2) == field_create(2, 2, [1, 1, 1])


def test_field_json_roundtrip():
    for q in (2, 7, 8, 9):
        F = GF(q)
        assert FieldSpec.from_json(F.to_json()) == F
        for a in range(q):
            assert F.element_from_json(F.element_to_json(a)) == a


@pytest.mark.parametrize("q,r", [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2)])
def test_trace_is_linear_onto_base(q, r):
    base = GF(q)
    big = field_create(base.p, base.e * r)
    ext = FieldExtension(big, base)
    values = [trace(a, ext) for a in range(big.q)]
    # onto the base field, each value hit q^{r-1} times
    assert sorted(set(values)) == list(range(q))
    assert all(values.count(v) == q ** (r - 1) for v in range(q))
    for a, b in itertools.product(range(big.q), repeat=2):
        if (a * 7 + b) % 5 == 0:
            assert trace(big.add(a, b), ext) == base.add(values[a], values[b])


def test_trace_values_over_f4():
    ext = FieldExtension(GF(4), GF(2))
    assert [trace(a, ext) for a in range(4)] == [0, 0, 1, 1]


@pytest.mark.parametrize("q,r", [(2, 2), (2, 3), (3, 2), (4, 2), (3, 3)])
def test_dual_basis_is_trace_dual(q, r):
    base = GF(q)
    big = field_create(base.p, base.e * r)
    ext = FieldExtension(big, base)
    beta = power_basis(ext)
    alpha = dual_basis(beta)
    for i, b in enumerate(beta.elements):
        for j, a in enumerate(alpha.elements):
            assert trace(big.mul(a, b), ext) == (1 if i == j else 0)
    assert alpha.dual.elements == beta.elements


def test_f4_dual_basis_and_expansion():
    ext = FieldExtension(GF(4), GF(2))
    beta = power_basis(ext)
    assert beta.elements == (1, 2)
    assert dual_basis(beta).elements == (3, 1)
    w = expand_vector([1, 3], beta)
    assert w == [1, 0, 1, 1]
    assert unexpand_vector(w, beta) == [1, 3]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 26), min_size=1, max_size=5))
def test_expansion_roundtrip_f27(v):
    ext = FieldExtension(GF(27), GF(3))
    b = power_basis(ext)
    assert unexpand_vector(expand_vector(v, b), b) == v


def test_basis_must_be_independent():
    ext = FieldExtension(GF(4), GF(2))
    with pytest.raises(DomainError):
        OrderedBasis(ext, (1, 1))


def test_extension_requires_subfield():
    with pytest.raises(DomainError):
        FieldExtension(GF(8), GF(4))
    ext = FieldExtension(GF(16), GF(4))
    sub = {ext.embed(b) for b in range(4)}
    assert len(sub) == 4 and all(ext.frobenius(a) == a for a in sub)
    with pytest.raises(DomainError):
        ext.restrict(next(a for a in range(16) if a not in sub))


def test_irreducible_counts():
    # necklace formula: number of monic irreducibles of degree d over F_q
    def count(q, d):
        mu = {1: 1, 2: -1, 3: -1, 4: 0}
        return sum(mu[e] * q ** (d // e) for e in range(1, d + 1) if d % e == 0) // d

    for q, d in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (5, 2)]:
        assert len(list(poly.irreducible_polys(GF(q), d))) == count(q, d)


@pytest.mark.parametrize("q,d", [(2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (5, 2)])
def test_irreducibility_against_products(q, d):
    F = GF(q)
    reducible = set()
    for i in range(1, d // 2 + 1):
        for g in poly.monic_polys(F, i):
            for h in poly.monic_polys(F, d - i):
                reducible.add(tuple(poly.mul(F, g, h)))
    for f in poly.monic_polys(F, d):
        assert poly.is_irreducible(F, f) == (tuple(f) not in reducible)


def test_high_degree_irreducibles_are_fast():
    F = GF(8)
    f = next(poly.irreducible_polys(F, 8))
    assert poly.is_irreducible(F, f) and len(f) == 9
