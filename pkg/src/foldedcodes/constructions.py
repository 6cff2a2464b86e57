"""Code constructions: polynomial ideal (CRT) codes, the long binary dually
QMDS family, QMDS subcodes and the repetition-dual MDS code."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from foldedcodes import fqmat, poly
from foldedcodes.code import LinearCode
from foldedcodes.errors import DomainError
from foldedcodes.fqmat import MatrixFq
from foldedcodes.gf import FieldSpec, field_create
from foldedcodes.qmds import ceil_div, minors_qmds


@dataclass(frozen=True)
class ModuliSet:
    """n pairwise coprime monic polynomials of a common degree r (coefficients low-degree-first)."""

    field: FieldSpec
    polys: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        F = self.field
        polys = tuple(tuple(poly.trim(f)) for f in self.polys)
        object.__setattr__(self, "polys", polys)
        if not polys:
            raise DomainError("need at least one modulus")
        r = len(polys[0]) - 1
        for f in polys:
            if len(f) - 1 != r or r < 1:
                raise DomainError(f"moduli must share a degree r >= 1; got {poly.to_str(f)}")
            if f[-1] != 1:
                raise DomainError(f"modulus {poly.to_str(f)} is not monic")
        for (i, f), (j, g) in itertools.combinations(enumerate(polys), 2):
            h = poly.gcd(F, f, g)
            if len(h) > 1:
                raise DomainError(f"moduli {i} and {j} share the factor {poly.to_str(h)}")

    @property
    def r(self) -> int:
        return len(self.polys[0]) - 1

    @property
    def n(self) -> int:
        return len(self.polys)

    def __str__(self):
        return "{" + ", ".join(poly.to_str(f) for f in self.polys) + "}"


def crt_map(moduli: ModuliSet, f: Sequence[int]) -> list[int]:
    """(f mod F_1 | ... | f mod F_n), each remainder as r coefficients, low degree first."""
    F, r = moduli.field, moduli.r
    out: list[int] = []
    for m in moduli.polys:
        rem = poly.mod(F, f, m)
        out.extend(rem + [0] * (r - len(rem)))
    return out


def pi_code(field: FieldSpec, moduli: ModuliSet, k: int, blocks: Sequence[MatrixFq] | None = None) -> LinearCode:
    """Polynomial ideal code {crt_map(f) : deg f < k}, optionally with block i right-multiplied by blocks[i]."""
    if moduli.field != field:
        raise DomainError("moduli are over a different field")
    n, r = moduli.n, moduli.r
    if not 1 <= k <= r * n:
        raise DomainError(f"k = {k} outside [1, rn = {r * n}]")
    rows = []
    # x^i mod F_j, advanced one power at a time
    rems = [[1] if len(m) > 1 else [] for m in moduli.polys]
    for _ in range(k):
        row = []
        for rem in rems:
            row.extend(rem + [0] * (r - len(rem)))
        rows.append(row)
        rems = [poly.mod(field, [0] + rem, m) for rem, m in zip(rems, moduli.polys)]
    G = MatrixFq(field, rows, cols=r * n)
    if blocks is not None:
        if len(blocks) != n:
            raise DomainError(f"expected {n} block matrices, got {len(blocks)}")
        for i, A in enumerate(blocks):
            if A.shape != (r, r) or not fqmat.is_invertible(A):
                raise DomainError(f"block matrix {i} is not an invertible {r}x{r} matrix")
        G = G @ fqmat.block_diag(list(blocks))
    return LinearCode(field, n, r, G)


def split_moduli(field: FieldSpec, r: int, n: int, mode: str = "distinct") -> ModuliSet:
    """Moduli that split into linear factors with root sets disjoint across blocks.

    distinct: block i takes roots i*r, ..., i*r + r - 1 of the canonical element order (needs rn <= q).
    repeated: F_i = (x - a_i)^r with a_i the i-th element (needs n <= q), giving multiplicity codes.
    """
    q = field.q
    if mode == "distinct":
        if r * n > q:
            raise DomainError(f"distinct-roots moduli need rn <= q (rn = {r * n}, q = {q})")
        roots = [list(range(i * r, (i + 1) * r)) for i in range(n)]
    elif mode == "repeated":
        if n > q:
            raise DomainError(f"repeated-root moduli need n <= q (n = {n}, q = {q})")
        roots = [[i] * r for i in range(n)]
    else:
        raise DomainError(f"unknown moduli mode {mode!r}")
    return ModuliSet(field, tuple(tuple(poly.from_roots(field, rs)) for rs in roots))


def irreducible_moduli(field: FieldSpec, r: int, n: int) -> ModuliSet:
    """The first n monic irreducible polynomials of degree r, in canonical order."""
    polys = list(itertools.islice(poly.irreducible_polys(field, r), n))
    if len(polys) < n:
        raise DomainError(f"only {len(polys)} monic irreducibles of degree {r} over {field}")
    return ModuliSet(field, tuple(tuple(f) for f in polys))


def random_coprime_moduli(field: FieldSpec, r: int, n: int, rng: np.random.Generator, tries: int = 10_000) -> ModuliSet:
    """Pairwise coprime monic degree-r moduli drawn uniformly, one at a time, rejecting clashes."""
    chosen: list[list[int]] = []
    for _ in range(tries):
        if len(chosen) == n:
            break
        f = [int(x) for x in rng.integers(0, field.q, size=r)] + [1]
        if all(len(poly.gcd(field, f, g)) == 1 for g in chosen):
            chosen.append(f)
    if len(chosen) < n:
        raise DomainError(f"could not find {n} pairwise coprime moduli of degree {r} over {field}")
    return ModuliSet(field, tuple(tuple(f) for f in chosen))


def subset_vectors(I: Sequence[int], r: int) -> list[list[int]]:
    """u_{I,0}, ..., u_{I,r} in F_2^r for a nonempty I of {0, ..., r}.

    With m = max(I): u_i = e_i for i < m, u_i = e_{i-1} for i > m, and u_m is
    the sum of e_j over the other j in I (zero when |I| = 1).  A nonempty
    J has sum_{i in J} u_i = 0 exactly when J = I.
    """
    I = sorted(set(I))
    if not I or I[0] < 0 or I[-1] > r:
        raise DomainError(f"I must be a nonempty subset of range({r + 1})")
    m = I[-1]
    out = []
    for i in range(r + 1):
        u = [0] * r
        if i < m:
            u[i] = 1
        elif i > m:
            u[i - 1] = 1
        else:
            for j in I[:-1]:
                u[j] = 1
        out.append(u)
    return out


def subset_order(r: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of {0, ..., r} by ascending characteristic bitmask."""
    return [tuple(b for b in range(r + 1) if mask >> b & 1) for mask in range(1, 2 ** (r + 1))]


def subset_vector_table(r: int) -> dict[tuple[int, ...], list[list[int]]]:
    return {I: subset_vectors(I, r) for I in subset_order(r)}


def binary_long_code(r: int) -> LinearCode:
    """Dually QMDS code of type [2^{r+1} - 1, r, r + 1, 2^{r+1} - 2] over F_2.

    Block i is the (r+1) x r matrix whose rows are the subset vectors of the
    i-th nonempty subset of {0, ..., r}.
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    F2 = field_create(2)
    subsets = subset_order(r)
    G = np.zeros((r + 1, r * len(subsets)), dtype=np.int64)
    for b, I in enumerate(subsets):
        G[:, b * r : (b + 1) * r] = subset_vectors(I, r)
    return LinearCode(F2, len(subsets), r, MatrixFq(F2, G))


def qmds_subcode(c: LinearCode, k_prime: int) -> LinearCode:
    """Subcode spanned by the first k' canonical generator rows; QMDS with the same distance."""
    n, r, k = c.n, c.r, c.k
    lo = r * (ceil_div(k, r) - 1)
    if not lo < k_prime < k:
        raise DomainError(f"k' = {k_prime} outside the open window ({lo}, {k})")
    if not minors_qmds(c):
        raise DomainError("the parent code is not QMDS")
    return LinearCode(c.field, n, r, c.canonical.select_rows(range(k_prime)))


def repetition_dual_code(n: int, r: int, field: FieldSpec) -> LinearCode:
    """Dual of {(c, ..., c) : c in F_q^r}: MDS of type [n, r, r(n-1), 2]."""
    if n < 2:
        raise DomainError("n must be >= 2")
    G = np.zeros((r * (n - 1), r * n), dtype=np.int64)
    minus_one = field.neg(1)
    for i in range(n - 1):
        for j in range(r):
            G[i * r + j, i * r + j] = 1
            G[i * r + j, (n - 1) * r + j] = minus_one
    return LinearCode(field, n, r, MatrixFq(field, G))
