"""Finite fields F_{p^e}, field extensions, traces and dual bases.

An element of F_{p^e} is stored as a plain ``int`` in ``[0, q)``: the base-p
digits of the integer are the polynomial coordinates of the element in the
basis 1, x, ..., x^{e-1} of F_p[x]/(modulus), lowest degree first.  The
integer order is the canonical element order used throughout the package.

Arithmetic methods accept Python ints or integer numpy arrays (elementwise).
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from foldedcodes import poly
from foldedcodes.errors import DomainError

_ADD_TABLE_MAX = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _digits(a: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        out.append(a % p)
        a //= p
    return out


def _undigits(c: Sequence[int], p: int) -> int:
    a = 0
    for x in reversed(c):
        a = a * p + int(x)
    return a


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q, q = p^e, realised as F_p[x]/(modulus)."""

    p: int
    e: int = 1
    modulus: tuple[int, ...] | None = None
    _t: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        p, e = self.p, self.e
        if not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
            raise DomainError(f"characteristic {p} is not prime")
        if e < 1:
            raise DomainError(f"extension degree must be >= 1, got {e}")
        if e == 1:
            if self.modulus is not None and tuple(self.modulus) not in ((0, 1),):
                raise DomainError("prime fields take no modulus (or x)")
            object.__setattr__(self, "modulus", None)
        else:
            if self.modulus is None:
                raise DomainError("extension fields need a modulus; use field_create()")
            mod = tuple(int(c) % p for c in self.modulus)
            if len(mod) != e + 1 or mod[-1] != 1:
                raise DomainError(f"modulus must be monic of degree {e}")
            if not poly.is_irreducible(FieldSpec(p), list(mod)):
                raise DomainError(f"modulus {poly.to_str(mod)} is reducible over F_{p}")
            object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "_t", self._build_tables())

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __str__(self):
        return f"GF({self.p})" if self.e == 1 else f"GF({self.p}^{self.e})"

    # -- table construction -------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        p, e, mod = self.p, self.e, self.modulus
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * e - 2, e - 1, -1):
            c = prod[d]
            if c:
                for j in range(e + 1):
                    prod[d - e + j] = (prod[d - e + j] - c * mod[j]) % p
        return _undigits(prod[:e], p)

    def _build_tables(self) -> dict:
        p, e, q = self.p, self.e, self.p**self.e
        t: dict = {}
        if q == 2:
            exp = [1]
        else:
            mul = (lambda a, b: a * b % p) if e == 1 else self._raw_mul
            for g in range(2, q):
                exp = [1]
                x = g
                while x != 1:
                    exp.append(x)
                    x = mul(x, g)
                if len(exp) == q - 1:
                    break
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        t["exp"] = exp + exp
        t["log"] = log
        t["exp_np"] = np.array(t["exp"], dtype=np.int64)
        t["log_np"] = np.array(log, dtype=np.int64)
        if e > 1 and p > 2:
            neg = [_undigits([(-c) % p for c in _digits(a, p, e)], p) for a in range(q)]
            t["neg"] = neg
            t["neg_np"] = np.array(neg, dtype=np.int64)
            if q <= _ADD_TABLE_MAX:
                dig = np.array([_digits(a, p, e) for a in range(q)], dtype=np.int64)
                s = (dig[:, None, :] + dig[None, :, :]) % p
                table = (s * (p ** np.arange(e))).sum(axis=2)
                t["add_np"] = table
                t["add"] = table.tolist()
        return t

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        p = self.p
        if isinstance(a, int) and isinstance(b, int):
            if self.e == 1:
                return (a + b) % p
            if p == 2:
                return a ^ b
            if "add" in self._t:
                return self._t["add"][a][b]
            return _undigits([(x + y) % p for x, y in zip(_digits(a, p, self.e), _digits(b, p, self.e))], p)
        if self.e == 1:
            return (np.asarray(a) + np.asarray(b)) % p
        if p == 2:
            return np.bitwise_xor(a, b)
        if "add_np" in self._t:
            return self._t["add_np"][a, b]
        a, b = np.asarray(a), np.asarray(b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        place = 1
        for _ in range(self.e):
            out += ((a // place % p + b // place % p) % p) * place
            place *= p
        return out

    def neg(self, a):
        if isinstance(a, int):
            if self.e == 1:
                return (-a) % self.p
            return a if self.p == 2 else self._t["neg"][a]
        if self.e == 1:
            return (-np.asarray(a)) % self.p
        return np.asarray(a) if self.p == 2 else self._t["neg_np"][a]

    def sub(self, a, b):
        if self.p == 2 and self.e > 1:
            return a ^ b if isinstance(a, int) and isinstance(b, int) else np.bitwise_xor(a, b)
        if self.e == 1:
            if isinstance(a, int) and isinstance(b, int):
                return (a - b) % self.p
            return (np.asarray(a) - np.asarray(b)) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if self.e == 1:
                return a * b % self.p
            if a == 0 or b == 0:
                return 0
            t = self._t
            return t["exp"][t["log"][a] + t["log"][b]]
        if self.e == 1:
            return (np.asarray(a) * np.asarray(b)) % self.p
        a, b = np.asarray(a), np.asarray(b)
        t = self._t
        out = t["exp_np"][t["log_np"][a] + t["log_np"][b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        t = self._t
        if isinstance(a, int):
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return t["exp"][(self.q - 1 - t["log"][a]) % (self.q - 1)]
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero")
        return t["exp_np"][(self.q - 1 - t["log_np"][a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        a = int(a)
        if n == 0:
            return 1
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0
        t = self._t
        return t["exp"][(t["log"][a] * n) % (self.q - 1)]

    # -- coordinates & serialization ----------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(_digits(int(a), self.p, self.e))

    def from_coeffs(self, c: Sequence[int]) -> int:
        if len(c) != self.e or any(not 0 <= int(x) < self.p for x in c):
            raise DomainError(f"{list(c)} is not a coefficient vector of {self}")
        return _undigits(c, self.p)

    def element_to_json(self, a: int):
        return int(a) if self.e == 1 else list(self.coeffs(a))

    def element_from_json(self, v) -> int:
        if self.e == 1:
            if isinstance(v, list):
                v = v[0] if len(v) == 1 else None
            if not isinstance(v, int) or not 0 <= v < self.p:
                raise DomainError(f"{v!r} is not an element of {self}")
            return v
        if isinstance(v, int) and 0 <= v < self.p:
            return v
        if not isinstance(v, list):
            raise DomainError(f"{v!r} is not an element of {self}")
        return self.from_coeffs(v)

    def to_json(self) -> dict:
        mod = list(self.modulus) if self.modulus is not None else [0, 1]
        return {"p": self.p, "e": self.e, "modulus": mod}

    @classmethod
    def from_json(cls, obj: dict) -> FieldSpec:
        e = int(obj.get("e", 1))
        mod = obj.get("modulus")
        return field_create(int(obj["p"]), e, mod if e > 1 else None)


def default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e (low-degree coefficients compared first)."""
    for g in poly.irreducible_polys(FieldSpec(p), e):
        return tuple(g)
    raise DomainError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, e: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if e > 1 and modulus is None:
        modulus = default_modulus(p, e)
    return FieldSpec(p, e, modulus)


def field_create(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated field F_{p^e}; the default modulus is the smallest monic irreducible."""
    if not is_prime(int(p)):
        raise DomainError(f"characteristic {p} is not prime")
    if e < 1:
        raise DomainError(f"extension degree must be >= 1, got {e}")
    mod = tuple(int(c) for c in modulus) if modulus is not None else None
    return _field_cached(int(p), int(e), mod)


def GF(q: int) -> FieldSpec:
    """Field of order q with the default modulus."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise DomainError(f"{q} is not a prime power")
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not is_prime(p):
        raise DomainError(f"{q} is not a prime power")
    return field_create(p, e)


class FieldExtension:
    """F_{q^r} over a subfield F_q, with the embedding of the subfield made explicit.

    ``base`` is identified with the subfield of ``big`` through the smallest
    root of ``base.modulus`` in ``big`` (the identity for prime subfields).
    """

    def __init__(self, big: FieldSpec, base: FieldSpec):
        if big.p != base.p or big.e % base.e:
            raise DomainError(f"{base} is not a subfield of {big}")
        self.big = big
        self.base = base
        self.r = big.e // base.e
        if base.e == 1:
            emb = list(range(base.p))
        else:
            mod = base.modulus

            def ev(theta):
                acc = 0
                for c in reversed(mod):
                    acc = big.add(big.mul(acc, theta), c)
                return acc

            theta = next(t for t in big.elements() if ev(t) == 0)
            emb = []
            for b in base.elements():
                acc, pw = 0, 1
                for c in base.coeffs(b):
                    acc = big.add(acc, big.mul(c, pw))
                    pw = big.mul(pw, theta)
                emb.append(acc)
        self._emb = emb
        self._res = {a: b for b, a in enumerate(emb)}

    def __repr__(self):
        return f"FieldExtension({self.big} / {self.base})"

    def __eq__(self, other):
        return isinstance(other, FieldExtension) and (self.big, self.base) == (other.big, other.base)

    def __hash__(self):
        return hash((self.big, self.base))

    def embed(self, b: int) -> int:
        return self._emb[int(b)]

    def restrict(self, a: int) -> int:
        """The base-field element equal to ``a``; fails if ``a`` is outside the subfield."""
        try:
            return self._res[int(a)]
        except KeyError:
            raise DomainError(f"element {a} of {self.big} does not lie in {self.base}") from None

    def frobenius(self, a: int) -> int:
        return self.big.pow(a, self.base.q)

    def trace(self, a: int) -> int:
        big = self.big
        acc, x = 0, int(a)
        for _ in range(self.r):
            acc = big.add(acc, x)
            x = self.frobenius(x)
        return self.restrict(acc)


def trace(a: int, ext: FieldExtension) -> int:
    """Tr_{F_{q^r}/F_q}(a) = a + a^q + ... + a^{q^{r-1}}, returned as a base-field element."""
    return ext.trace(a)


@dataclass(frozen=True)
class OrderedBasis:
    """An ordered basis of ``ext.big`` as a vector space over ``ext.base``."""

    ext: FieldExtension
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(int(b) for b in self.elements))
        if len(self.elements) != self.ext.r:
            raise DomainError(f"a basis of {self.ext.big} over {self.ext.base} has {self.ext.r} elements")
        from foldedcodes.fqmat import rank

        if rank(self.trace_form()) != self.ext.r:
            raise DomainError(f"{self.elements} is linearly dependent over {self.ext.base}")

    def trace_form(self):
        """The r x r matrix (Tr(b_i b_j)) over the base field."""
        from foldedcodes.fqmat import MatrixFq

        big = self.ext.big
        rows = [[self.ext.trace(big.mul(a, b)) for b in self.elements] for a in self.elements]
        return MatrixFq(self.ext.base, rows)

    @functools.cached_property
    def dual(self) -> OrderedBasis:
        from foldedcodes.fqmat import inverse

        big, ext = self.ext.big, self.ext
        tinv = inverse(self.trace_form()).entries
        out = []
        for j in range(ext.r):
            acc = 0
            for l, beta in enumerate(self.elements):
                acc = big.add(acc, big.mul(ext.embed(int(tinv[j, l])), beta))
            out.append(acc)
        return OrderedBasis(ext, tuple(out))

    def coordinates(self, a: int) -> tuple[int, ...]:
        """Base-field coordinates c with a = sum c_i b_i, via c_i = Tr(a * dual_i)."""
        big = self.ext.big
        return tuple(self.ext.trace(big.mul(int(a), al)) for al in self.dual.elements)

    def combine(self, coords: Sequence[int]) -> int:
        big, ext = self.ext.big, self.ext
        acc = 0
        for c, b in zip(coords, self.elements):
            acc = big.add(acc, big.mul(ext.embed(c), b))
        return acc


def power_basis(ext: FieldExtension) -> OrderedBasis:
    """(1, x, ..., x^{r-1}) where x is the generator of the big field's polynomial model."""
    big = ext.big
    theta = big.p if big.e > 1 else 1
    els, pw = [], 1
    for _ in range(ext.r):
        els.append(pw)
        pw = big.mul(pw, theta)
    return OrderedBasis(ext, tuple(els))


def dual_basis(b: OrderedBasis) -> OrderedBasis:
    """The unique basis a with Tr(b_i a_j) = delta_ij."""
    return b.dual


def expand_vector(v: Sequence[int], b: OrderedBasis) -> list[int]:
    """Componentwise coordinates: F_{q^r}^n -> F_q^{rn}."""
    out: list[int] = []
    for a in v:
        out.extend(b.coordinates(a))
    return out


def unexpand_vector(w: Sequence[int], b: OrderedBasis) -> list[int]:
    r = b.ext.r
    if len(w) % r:
        raise DomainError(f"length {len(w)} is not a multiple of {r}")
    return [b.combine(w[i : i + r]) for i in range(0, len(w), r)]
