"""Folded weight distributions: exhaustive counts, the dually-QMDS closed form,
MacWilliams equations and reconstruction of the tail from the head.

All counts are Python ints (arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from foldedcodes.code import LinearCode, weight_counts
from foldedcodes.errors import DomainError
from foldedcodes.qmds import ceil_div


def binom(u: int, v: int) -> int:
    """C(u, v), zero outside 0 <= v <= u."""
    if v < 0 or u < 0 or v > u:
        return 0
    return comb(u, v)


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]
    n: int
    r: int
    k: int
    q: int
    negative: tuple[int, ...] = field(default=())  # indices j with A_j < 0

    @property
    def valid(self) -> bool:
        return not self.negative

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, j: int) -> int:
        return self.counts[j]

    def to_json(self) -> dict:
        return {
            "params": {"n": self.n, "r": self.r, "k": self.k, "q": self.q},
            "A": [str(a) for a in self.counts],
            "valid": self.valid,
        }

    def table(self) -> str:
        width = max(len(str(a)) for a in self.counts)
        lines = [f"n={self.n} r={self.r} k={self.k} q={self.q}"]
        lines += [f"A_{j:<3d} {a:>{width}d}" for j, a in enumerate(self.counts)]
        return "\n".join(lines)


def _make(counts, n, r, k, q) -> WeightDistribution:
    counts = tuple(int(a) for a in counts)
    return WeightDistribution(counts, n, r, k, q, tuple(j for j, a in enumerate(counts) if a < 0))


def wdist_exhaustive(c: LinearCode, budget: int | None = None) -> WeightDistribution:
    return _make(weight_counts(c, budget), c.n, c.r, c.k, c.q)


def wdist_formula(n: int, r: int, k: int, q: int) -> WeightDistribution:
    """Weight distribution every dually QMDS code of type [n, r, k, n - ceil(k/r) + 1] must have.

    Negative entries mean no dually QMDS code with these parameters exists;
    they are kept and listed in ``negative``.
    """
    if not 1 <= k <= r * n:
        raise DomainError(f"k = {k} outside [1, rn = {r * n}]")
    d = n - ceil_div(k, r) + 1
    A = [1] + [0] * n
    for j in range(d, n + 1):
        s = sum((-1) ** i * binom(j, i) * (q ** (k - r * (n - j + i)) - 1) for i in range(j - d + 1))
        A[j] = binom(n, j) * s
    return _make(A, n, r, k, q)


def macwilliams_check(A: WeightDistribution, A_perp: WeightDistribution) -> list[Fraction]:
    """Residuals sum_j C(n-j, v) A_j - q^{k-rv} sum_j C(n-j, n-v) A_perp_j, v = 0..n.

    All zero iff the pair satisfies the folded MacWilliams equations.
    """
    n, r, q, k = A.n, A.r, A.q, A.k
    if (A_perp.n, A_perp.r, A_perp.q) != (n, r, q) or A_perp.k != r * n - k:
        raise DomainError("distributions are not a (code, dual) parameter pair")
    out = []
    for v in range(n + 1):
        lhs = sum(binom(n - j, v) * A.counts[j] for j in range(n - v + 1))
        rhs = sum(binom(n - j, n - v) * A_perp.counts[j] for j in range(v + 1))
        out.append(Fraction(lhs) - Fraction(q) ** (k - r * v) * rhs)
    return out


@dataclass(frozen=True)
class PascalPair:
    """M_n = ((-1)^{n-i+j} C(j, n-i)) and N_n = (C(n-j, i)), i, j = 0..n; N_n = M_n^{-1}."""

    n: int
    M: tuple[tuple[int, ...], ...]
    N: tuple[tuple[int, ...], ...]

    def product(self) -> list[list[int]]:
        size = self.n + 1
        return [[sum(self.M[i][l] * self.N[l][j] for l in range(size)) for j in range(size)] for i in range(size)]

    def is_inverse_pair(self) -> bool:
        P = self.product()
        return all(P[i][j] == (i == j) for i in range(self.n + 1) for j in range(self.n + 1))


def pascal_pair(n: int) -> PascalPair:
    if n < 0:
        raise DomainError("n must be nonnegative")
    rng = range(n + 1)
    M = tuple(tuple((-1) ** (n - i + j) * binom(j, n - i) for j in rng) for i in rng)
    N = tuple(tuple(binom(n - j, i) for j in rng) for i in rng)
    return PascalPair(n, M, N)


def reconstruct_distribution(
    head, n: int, r: int, k: int, q: int, d: int, d_perp: int
) -> WeightDistribution:
    """Full distribution from A_d, ..., A_{n - d_perp}.

    ``d_perp = n + 1`` stands for a zero dual (k = rn).  The tail
    A_{n-d_perp+1}, ..., A_n solves N_{d_perp-1} x = b, where b_u collects the
    MacWilliams equation for u, and is recovered as x = M_{d_perp-1} b.
    """
    head = [int(a) for a in head]
    if not 1 <= d <= n or not 1 <= d_perp <= n + 1:
        raise DomainError(f"distances out of range: d={d}, d_perp={d_perp}, n={n}")
    if d_perp - 1 > k // r:
        raise DomainError(f"d_perp = {d_perp} violates the dual Singleton bound for k = {k}, r = {r}")
    expected = max(0, n - d_perp - d + 1)
    if len(head) != expected:
        raise DomainError(f"head must hold A_{d}..A_{n - d_perp} ({expected} values), got {len(head)}")
    A = [1] + [0] * n
    for off, a in enumerate(head):
        A[d + off] = a
    t = d_perp - 1  # system size t + 1
    start = n - d_perp + 1
    b = []
    for u in range(t + 1):
        val = binom(n, u) * (q ** (k - r * u) - 1)
        val -= sum(binom(n - v, u) * A[v] for v in range(d, n - d_perp + 1))
        b.append(val)
    M = pascal_pair(t).M
    tail = [sum(M[i][l] * b[l] for l in range(t + 1)) for i in range(t + 1)]
    for off, a in enumerate(tail):
        j = start + off
        if j == 0:
            # A_0 = 1 already sits on the right-hand side, so the unknown is A_0 - 1
            if a != 0:
                raise DomainError("inconsistent parameters: reconstructed A_0 != 1")
            continue
        if j < d and a != 0:
            raise DomainError(f"inconsistent parameters: reconstructed A_{j} = {a} below d = {d}")
        A[j] = a
    out = _make(A, n, r, k, q)
    if not out.valid:
        raise DomainError(f"invalid head: negative reconstructed counts at {list(out.negative)}")
    return out
