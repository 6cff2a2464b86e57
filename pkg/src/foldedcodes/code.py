"""Linear codes in F_q^{rn} under the folded Hamming metric.

A vector of length rn is read as n consecutive blocks of width r; its folded
weight is the number of nonzero blocks.  Block indices are 0-based in this
module (the CLI uses 1-based indices).
"""

from __future__ import annotations

import functools
import itertools
import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from foldedcodes import fqmat
from foldedcodes.errors import BudgetExceededError, DomainError
from foldedcodes.fqmat import MatrixFq
from foldedcodes.gf import FieldSpec, OrderedBasis

DEFAULT_BUDGET = 1 << 24
_CHUNK = 1 << 15


class LinearCode:
    """An F_q-linear code of block length n and block width r.

    ``generator`` keeps the rows as supplied; ``canonical`` is its RREF and is
    what equality, enumeration and derived matrices are computed from.
    """

    def __init__(self, field: FieldSpec, n: int, r: int, generator: MatrixFq):
        if n < 1 or r < 1:
            raise DomainError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
        if generator.field != field:
            raise DomainError("generator is over a different field")
        if generator.cols != r * n:
            raise DomainError(f"generator has {generator.cols} columns, expected r*n = {r * n}")
        res = fqmat.rref_rank(generator)
        if res.rank != generator.rows:
            raise DomainError(f"generator rows are rank deficient (rank {res.rank} < {generator.rows})")
        self.field = field
        self.n = n
        self.r = r
        self.generator = generator
        self.canonical = MatrixFq(field, res.rref.entries[: res.rank], cols=r * n)

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def length(self) -> int:
        return self.r * self.n

    @property
    def q(self) -> int:
        return self.field.q

    @functools.cached_property
    def parity(self) -> MatrixFq:
        """(rn - k) x rn parity-check matrix from the RREF free-variable construction."""
        return fqmat.kernel_basis(self.canonical)

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and (self.field, self.n, self.r) == (other.field, other.n, other.r)
            and self.canonical == other.canonical
        )

    def __hash__(self):
        return hash((self.field, self.n, self.r, self.canonical))

    def __repr__(self):
        return f"LinearCode({self.field}, n={self.n}, r={self.r}, k={self.k})"

    @classmethod
    def from_span(cls, field: FieldSpec, n: int, r: int, rows) -> LinearCode:
        """The code spanned by arbitrary (possibly dependent) rows."""
        m = rows if isinstance(rows, MatrixFq) else MatrixFq(field, rows, cols=r * n)
        return cls(field, n, r, fqmat.row_basis(m))

    @classmethod
    def zero(cls, field: FieldSpec, n: int, r: int) -> LinearCode:
        return cls(field, n, r, fqmat.zeros(field, 0, r * n))

    @classmethod
    def full(cls, field: FieldSpec, n: int, r: int) -> LinearCode:
        return cls(field, n, r, fqmat.identity(field, r * n))

    def contains(self, v: Sequence[int]) -> bool:
        m = fqmat.vstack([self.canonical, MatrixFq(self.field, [list(v)], cols=self.length)])
        return fqmat.rank(m) == self.k

    def encode(self, message: Sequence[int]) -> list[int]:
        """message * canonical generator."""
        msg = MatrixFq(self.field, [list(message)], cols=self.k)
        return (msg @ self.canonical).row(0)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "n": self.n,
            "r": self.r,
            "generator": self.generator.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> LinearCode:
        field = FieldSpec.from_json(obj["field"])
        n, r = int(obj["n"]), int(obj["r"])
        gen = MatrixFq.from_json(field, obj["generator"], cols=r * n)
        return cls(field, n, r, gen)


def from_generator(field: FieldSpec, n: int, r: int, rows) -> LinearCode:
    """Code with the given full-rank generator rows."""
    m = rows if isinstance(rows, MatrixFq) else MatrixFq(field, rows, cols=r * n)
    return LinearCode(field, n, r, m)


def load_code(path: str | Path) -> LinearCode:
    with open(path) as fh:
        return LinearCode.from_json(json.load(fh))


def save_code(c: LinearCode, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(c.to_json(), fh)
        fh.write("\n")


def dual(c: LinearCode) -> LinearCode:
    return LinearCode(c.field, c.n, c.r, c.parity)


def folded_weight(v: Sequence[int], r: int) -> int:
    """Number of nonzero width-r blocks of v."""
    v = np.asarray(v)
    if r < 1 or v.shape[-1] % r:
        raise DomainError(f"length {v.shape[-1]} is not a multiple of r = {r}")
    return int(np.any(v.reshape(-1, r) != 0, axis=1).sum())


def folded_weights(words: np.ndarray, r: int) -> np.ndarray:
    """Folded weights of the rows of a 2-d array."""
    n = words.shape[1] // r
    return np.any(words.reshape(words.shape[0], n, r) != 0, axis=2).sum(axis=1)


def _span_rows(F: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All combinations sum m_i rows_i, messages in lexicographic order (first row most significant)."""
    words = np.zeros((1, rows.shape[1]), dtype=np.int64)
    scalars = np.arange(F.q, dtype=np.int64)
    for g in rows[::-1]:
        scaled = F.mul(scalars[:, None], g[None, :])
        words = F.add(scaled[:, None, :], words[None, :, :]).reshape(-1, rows.shape[1])
    return words


def check_budget(q: int, k: int, budget: int | None) -> None:
    budget = DEFAULT_BUDGET if budget is None else budget
    if q**k > budget:
        raise BudgetExceededError(f"exhaustive enumeration of {q}^{k} codewords exceeds budget {budget}")


def codeword_chunks(c: LinearCode, budget: int | None = None) -> Iterator[np.ndarray]:
    """Every codeword exactly once, as consecutive 2-d array chunks.

    Order: message vectors over F_q^k in lexicographic order (element order =
    integer encoding), encoded with the canonical generator.
    """
    check_budget(c.q, c.k, budget)
    F = c.field
    G = c.canonical.entries
    if c.k == 0:
        yield np.zeros((1, c.length), dtype=np.int64)
        return
    inner = 1
    while inner < c.k and F.q ** (inner + 1) <= _CHUNK:
        inner += 1
    outer = c.k - inner
    tail = _span_rows(F, G[outer:])
    for prefix in itertools.product(range(F.q), repeat=outer):
        offset = np.zeros(c.length, dtype=np.int64)
        for a, g in zip(prefix, G[:outer]):
            if a:
                offset = F.add(offset, F.mul(a, g))
        yield F.add(offset[None, :], tail)


def codewords(c: LinearCode, budget: int | None = None) -> np.ndarray:
    return np.vstack(list(codeword_chunks(c, budget)))


def weight_counts(c: LinearCode, budget: int | None = None) -> list[int]:
    """Exhaustive folded weight distribution (A_0, ..., A_n) as Python ints."""
    counts = np.zeros(c.n + 1, dtype=np.int64)
    for chunk in codeword_chunks(c, budget):
        counts += np.bincount(folded_weights(chunk, c.r), minlength=c.n + 1)
    return [int(x) for x in counts]


def _subsets_full_rank(G: MatrixFq, n: int, r: int, size: int, target: int) -> bool:
    for S in itertools.combinations(range(n), size):
        if fqmat.rank(fqmat.block_submatrix(G, S, r)) != target:
            return False
    return True


def distance_by_rank(G: MatrixFq, n: int, r: int) -> int:
    """Largest d such that every n-d+1 blocks of G have rank k (k = rows of G, full rank)."""
    k = G.rows
    s = -(-k // r)
    while s < n and not _subsets_full_rank(G, n, r, s, k):
        s += 1
    return n - s + 1


def dual_distance_by_rank(G: MatrixFq, n: int, r: int) -> int | None:
    """Distance of the code with parity-check matrix G: 1 + largest t with every t blocks of rank rt."""
    if r * n == G.rows:
        return None
    t = 0
    while t < n and _subsets_full_rank(G, n, r, t + 1, r * (t + 1)):
        t += 1
    return t + 1


def min_distance(c: LinearCode, method: str = "exhaustive", budget: int | None = None) -> int | None:
    """Minimum folded distance; ``None`` for the zero code."""
    if c.k == 0:
        return None
    if method == "exhaustive":
        d = c.n + 1
        for chunk in codeword_chunks(c, budget):
            w = folded_weights(chunk, c.r)
            w = w[w > 0]
            if w.size:
                d = min(d, int(w.min()))
        return d
    if method == "rank_blocks":
        return distance_by_rank(c.canonical, c.n, c.r)
    raise DomainError(f"unknown distance method {method!r}")


def _check_subset(c: LinearCode, I: Iterable[int]) -> list[int]:
    idx = sorted(set(int(i) for i in I))
    if not idx:
        raise DomainError("block subset I must be nonempty")
    for i in idx:
        if not 0 <= i < c.n:
            raise DomainError(f"block index {i} out of range for n = {c.n}")
    return idx


def restrict(c: LinearCode, I: Iterable[int]) -> LinearCode:
    """C^I: projection of C onto the blocks in I."""
    idx = _check_subset(c, I)
    sub = fqmat.block_submatrix(c.canonical, idx, c.r)
    return LinearCode.from_span(c.field, len(idx), c.r, sub)


def shorten(c: LinearCode, I: Iterable[int]) -> LinearCode:
    """C_I: codewords vanishing outside I, projected onto I."""
    idx = _check_subset(c, I)
    rest = [i for i in range(c.n) if i not in idx]
    if not rest:
        return c
    G = c.canonical
    # messages m with m G_rest = 0
    msgs = fqmat.kernel_basis(fqmat.block_submatrix(G, rest, c.r).T)
    if msgs.rows == 0:
        return LinearCode.zero(c.field, len(idx), c.r)
    words = msgs @ G
    return LinearCode.from_span(c.field, len(idx), c.r, fqmat.block_submatrix(words, idx, c.r))


@dataclass(frozen=True)
class Isometry:
    """phi(c_1, ..., c_n) = (c_{sigma(0)} A_0, ..., c_{sigma(n-1)} A_{n-1}), 0-based sigma."""

    sigma: tuple[int, ...]
    blocks: tuple[MatrixFq, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(int(s) for s in self.sigma))
        object.__setattr__(self, "blocks", tuple(self.blocks))
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)):
            raise DomainError(f"{self.sigma} is not a permutation of range({n})")
        if len(self.blocks) != n:
            raise DomainError(f"expected {n} blocks, got {len(self.blocks)}")
        for i, A in enumerate(self.blocks):
            if A.rows != A.cols or A.rows != self.r:
                raise DomainError("isometry blocks must all be r x r")
            if not fqmat.is_invertible(A):
                raise DomainError(f"isometry block {i} is singular")

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def r(self) -> int:
        return self.blocks[0].rows

    @property
    def field(self) -> FieldSpec:
        return self.blocks[0].field

    def matrix(self) -> MatrixFq:
        """The rn x rn matrix M with phi(c) = c M (block (sigma(i), i) equals A_i)."""
        n, r = self.n, self.r
        out = np.zeros((r * n, r * n), dtype=np.int64)
        for i, (s, A) in enumerate(zip(self.sigma, self.blocks)):
            out[s * r : (s + 1) * r, i * r : (i + 1) * r] = A.entries
        return MatrixFq(self.field, out)

    def apply(self, v: Sequence[int]) -> list[int]:
        return (MatrixFq(self.field, [list(v)], cols=self.r * self.n) @ self.matrix()).row(0)

    def inverse(self) -> Isometry:
        inv = [0] * self.n
        for i, s in enumerate(self.sigma):
            inv[s] = i
        return Isometry(tuple(inv), tuple(fqmat.inverse(self.blocks[inv[j]]) for j in range(self.n)))

    def transpose(self) -> Isometry:
        """Isometry whose matrix is matrix().T."""
        inv = [0] * self.n
        for i, s in enumerate(self.sigma):
            inv[s] = i
        return Isometry(tuple(inv), tuple(self.blocks[inv[j]].T for j in range(self.n)))

    def dual(self) -> Isometry:
        """The isometry carrying dual(C) to dual(phi(C)): matrix (M^{-1})^T = (sigma, (A_i^{-1})^T)."""
        return Isometry(self.sigma, tuple(fqmat.inverse(A).T for A in self.blocks))

    @classmethod
    def identity(cls, field: FieldSpec, n: int, r: int) -> Isometry:
        return cls(tuple(range(n)), tuple(fqmat.identity(field, r) for _ in range(n)))

    @classmethod
    def random(cls, field: FieldSpec, n: int, r: int, rng: np.random.Generator) -> Isometry:
        sigma = tuple(int(x) for x in rng.permutation(n))
        return cls(sigma, tuple(fqmat.random_invertible(field, r, rng) for _ in range(n)))

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "blocks": [A.to_json() for A in self.blocks]}

    @classmethod
    def from_json(cls, field: FieldSpec, obj: dict) -> Isometry:
        blocks = tuple(MatrixFq.from_json(field, b) for b in obj["blocks"])
        return cls(tuple(obj["sigma"]), blocks)


def apply_isometry(c: LinearCode, iso: Isometry) -> LinearCode:
    if (iso.n, iso.r) != (c.n, c.r) or iso.field != c.field:
        raise DomainError("isometry does not match the code's (field, n, r)")
    if c.k == 0:
        return c
    return LinearCode(c.field, c.n, c.r, c.generator @ iso.matrix())


def expand_code(generator: MatrixFq, basis: OrderedBasis) -> LinearCode:
    """F_q-linear image under the expansion map of the F_{q^r}-linear code spanned by ``generator``."""
    ext = basis.ext
    if generator.field != ext.big:
        raise DomainError(f"generator is over {generator.field}, basis is for {ext.big}")
    big, base = ext.big, ext.base
    n, r = generator.cols, ext.r
    from foldedcodes.gf import expand_vector

    rows = []
    for g in fqmat.row_basis(generator).tolist():
        for beta in basis.elements:
            rows.append(expand_vector([big.mul(beta, x) for x in g], basis))
    if not rows:
        return LinearCode.zero(base, n, r)
    return LinearCode.from_span(base, n, r, MatrixFq(base, rows, cols=r * n))
