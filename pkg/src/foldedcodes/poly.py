"""Univariate polynomials over a finite field.

Polynomials are plain lists of field elements, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from foldedcodes.gf import FieldSpec

Poly = list


def trim(a: Sequence[int]) -> Poly:
    a = [int(x) for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: Sequence[int]) -> int:
    """Degree of ``a``; the zero polynomial has degree -1."""
    return len(trim(a)) - 1


def add(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return trim(F.add(x, y) for x, y in zip(a, b))


def sub(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    return add(F, a, [F.neg(y) for y in b])


def mul(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [0] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    lead_inv = F.inv(b[-1])
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = F.mul(rem[-1], lead_inv)
        quot[shift] = factor
        for j, y in enumerate(b):
            rem[shift + j] = F.sub(rem[shift + j], F.mul(factor, y))
        rem = trim(rem)
    return trim(quot), rem


def mod(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    return divmod_(F, a, b)[1]


def monic(F: FieldSpec, a: Sequence[int]) -> Poly:
    a = trim(a)
    if not a:
        return a
    inv = F.inv(a[-1])
    return [F.mul(x, inv) for x in a]


def gcd(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> Poly:
    """Monic greatest common divisor."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def from_roots(F: FieldSpec, roots: Sequence[int]) -> Poly:
    """The monic polynomial prod (x - a) over ``roots``."""
    out: Poly = [1]
    for a in roots:
        out = mul(F, out, [F.neg(a), 1])
    return out


def monic_polys(F: FieldSpec, deg: int) -> Iterator[Poly]:
    """All monic polynomials of degree ``deg``, lower coefficients in lexicographic order."""
    for low in itertools.product(range(F.q), repeat=deg):
        yield list(low) + [1]


def powmod(F: FieldSpec, a: Sequence[int], e: int, f: Sequence[int]) -> Poly:
    """a^e mod f by square-and-multiply."""
    result, base = [1], mod(F, a, f)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, base), f)
        base = mod(F, mul(F, base, base), f)
        e >>= 1
    return mod(F, result, f)


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(F: FieldSpec, f: Sequence[int]) -> bool:
    """Rabin's test: f | x^{q^n} - x, and gcd(x^{q^{n/p}} - x, f) = 1 for each prime p | n."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    f = monic(F, f)
    x = [0, 1]
    frob = [x]  # frob[i] = x^{q^i} mod f
    for _ in range(n):
        frob.append(powmod(F, frob[-1], F.q, f))
    if frob[n] != x:
        return False
    return all(len(gcd(F, sub(F, frob[n // p], x), f)) == 1 for p in _prime_factors(n))


def irreducible_polys(F: FieldSpec, deg: int) -> Iterator[Poly]:
    """Monic irreducibles of degree ``deg`` in the order of monic_polys."""
    if deg == 1:
        yield from monic_polys(F, 1)
        return
    # a zero constant term means a factor x, so that whole leading block is skipped
    for a0 in range(1, F.q):
        for rest in itertools.product(range(F.q), repeat=deg - 1):
            g = [a0, *rest, 1]
            if is_irreducible(F, g):
                yield g


def to_str(a: Sequence[int], var: str = "x") -> str:
    a = trim(a)
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mon:
            terms.append(str(c))
        elif c == 1:
            terms.append(mon)
        else:
            terms.append(f"{c}*{mon}")
    return " + ".join(terms)
