"""Dense exact linear algebra over a finite field.

Matrices hold field elements in an int64 numpy array.  Row reduction uses a
fixed pivoting rule (leftmost column, topmost nonzero row), so every derived
object (kernels, parity-check matrices, arcs) is reproducible.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from foldedcodes.errors import DomainError
from foldedcodes.gf import FieldSpec


class MatrixFq:
    """Immutable dense matrix over ``field``."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries, cols: int | None = None):
        arr = np.array(entries, dtype=np.int64)
        if arr.size == 0:
            rows = arr.shape[0] if arr.ndim >= 1 else 0
            if arr.ndim == 2:
                cols = arr.shape[1] if cols is None else cols
            arr = np.zeros((rows, cols or 0), dtype=np.int64)
        if arr.ndim != 2:
            raise DomainError(f"matrix entries must be 2-dimensional, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise DomainError(f"matrix entries outside {field}")
        arr.flags.writeable = False
        self.field = field
        self.entries = arr

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __repr__(self):
        return f"MatrixFq({self.field}, {self.rows}x{self.cols})"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries.tolist())

    def __eq__(self, other):
        return (
            isinstance(other, MatrixFq)
            and self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self):
        return hash((self.field, self.shape, self.entries.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    @property
    def T(self) -> MatrixFq:
        return MatrixFq(self.field, self.entries.T, cols=self.rows)

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        return matmul(self, other)

    def __add__(self, other: MatrixFq) -> MatrixFq:
        return MatrixFq(self.field, self.field.add(self.entries, other.entries), cols=self.cols)

    def __sub__(self, other: MatrixFq) -> MatrixFq:
        return MatrixFq(self.field, self.field.sub(self.entries, other.entries), cols=self.cols)

    def scale(self, a: int) -> MatrixFq:
        return MatrixFq(self.field, self.field.mul(int(a), self.entries), cols=self.cols)

    def row(self, i: int) -> list[int]:
        return self.entries[i].tolist()

    def select_rows(self, idx: Sequence[int]) -> MatrixFq:
        return MatrixFq(self.field, self.entries[list(idx)], cols=self.cols)

    def select_cols(self, idx: Sequence[int]) -> MatrixFq:
        return MatrixFq(self.field, self.entries[:, list(idx)], cols=len(idx))

    def to_json(self) -> list:
        F = self.field
        return [[F.element_to_json(x) for x in row] for row in self.entries.tolist()]

    @classmethod
    def from_json(cls, field: FieldSpec, rows: list, cols: int | None = None) -> MatrixFq:
        return cls(field, [[field.element_from_json(x) for x in row] for row in rows], cols=cols)


@dataclass(frozen=True)
class RrefResult:
    rref: MatrixFq
    rank: int
    pivot_cols: tuple[int, ...]


def zeros(field: FieldSpec, rows: int, cols: int) -> MatrixFq:
    return MatrixFq(field, np.zeros((rows, cols), dtype=np.int64))


def identity(field: FieldSpec, n: int) -> MatrixFq:
    return MatrixFq(field, np.eye(n, dtype=np.int64))


def hstack(mats: Sequence[MatrixFq]) -> MatrixFq:
    F = mats[0].field
    return MatrixFq(F, np.hstack([m.entries for m in mats]), cols=sum(m.cols for m in mats))


def vstack(mats: Sequence[MatrixFq]) -> MatrixFq:
    F = mats[0].field
    return MatrixFq(F, np.vstack([m.entries for m in mats]), cols=mats[0].cols)


def block_diag(blocks: Sequence[MatrixFq]) -> MatrixFq:
    F = blocks[0].field
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    i = j = 0
    for b in blocks:
        out[i : i + b.rows, j : j + b.cols] = b.entries
        i += b.rows
        j += b.cols
    return MatrixFq(F, out)


def matmul(a: MatrixFq, b: MatrixFq) -> MatrixFq:
    if a.cols != b.rows:
        raise DomainError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    F = a.field
    if F.e == 1:
        prod = (a.entries @ b.entries) % F.p
    else:
        prod = np.zeros((a.rows, b.cols), dtype=np.int64)
        for t in range(a.cols):
            prod = F.add(prod, F.mul(a.entries[:, t, None], b.entries[None, t, :]))
    return MatrixFq(F, prod, cols=b.cols)


def _rref_array(F: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = a.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = F.mul(F.inv(lead), a[r])
        col = a[:, c].copy()
        col[r] = 0
        others = np.flatnonzero(col)
        if others.size:
            a[others] = F.sub(a[others], F.mul(col[others, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref_rank(m: MatrixFq) -> RrefResult:
    """Gauss-Jordan elimination: reduced row echelon form, rank and pivot columns."""
    arr, piv = _rref_array(m.field, m.entries)
    return RrefResult(MatrixFq(m.field, arr, cols=m.cols), len(piv), tuple(piv))


_SMALL = 256  # entries; below this, scalar elimination beats numpy call overhead


def rank(m: MatrixFq) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field.p == 2 and m.field.e == 1:
        return _rank_gf2(m.entries)
    if m.rows * m.cols <= _SMALL:
        return _rank_small(m.field, m.entries.tolist())
    return len(_rref_array(m.field, m.entries)[1])


def _rank_small(F: FieldSpec, rows: list[list[int]]) -> int:
    rk = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        top = rows[rk]
        inv = F.inv(top[c])
        for i in range(rk + 1, len(rows)):
            x = rows[i][c]
            if x:
                f = F.mul(x, inv)
                rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], top)]
        rk += 1
        if rk == len(rows):
            break
    return rk


def _rank_gf2(arr: np.ndarray) -> int:
    # bitset elimination; same result as the generic path
    rows = [int("".join(map(str, row[::-1])), 2) for row in arr.tolist()]
    rk = 0
    while rows:
        pivot = rows.pop()
        if pivot == 0:
            continue
        rk += 1
        low = pivot & -pivot
        rows = [x ^ pivot if x & low else x for x in rows]
    return rk


def row_basis(m: MatrixFq) -> MatrixFq:
    """Nonzero rows of the RREF of ``m``."""
    res = rref_rank(m)
    return MatrixFq(m.field, res.rref.entries[: res.rank], cols=m.cols)


def kernel_basis(m: MatrixFq) -> MatrixFq:
    """Rows spanning the right kernel {x : m x^T = 0}, one per free column, in column order."""
    F = m.field
    res = rref_rank(m)
    R = res.rref.entries
    free = [c for c in range(m.cols) if c not in set(res.pivot_cols)]
    out = np.zeros((len(free), m.cols), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for i, pc in enumerate(res.pivot_cols):
            out[t, pc] = F.neg(int(R[i, f]))
    return MatrixFq(F, out, cols=m.cols)


def block_submatrix(m: MatrixFq, block_indices: Iterable[int], r: int) -> MatrixFq:
    """Columns of the selected width-r blocks (0-based indices), in increasing index order."""
    if r < 1 or m.cols % r:
        raise DomainError(f"{m.cols} columns do not split into blocks of width {r}")
    n = m.cols // r
    idx = sorted(set(int(i) for i in block_indices))
    for i in idx:
        if not 0 <= i < n:
            raise DomainError(f"block index {i} out of range for {n} blocks")
    cols = [i * r + j for i in idx for j in range(r)]
    return m.select_cols(cols)


def inverse(m: MatrixFq) -> MatrixFq:
    if m.rows != m.cols:
        raise DomainError("only square matrices are invertible")
    n = m.rows
    aug = np.hstack([m.entries, np.eye(n, dtype=np.int64)])
    arr, piv = _rref_array(m.field, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise DomainError("matrix is singular")
    return MatrixFq(m.field, arr[:, n:], cols=n)


def is_invertible(m: MatrixFq) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def solve_left(a: MatrixFq, b: MatrixFq) -> MatrixFq:
    """Some X with X a = b; raises if the system is inconsistent."""
    if a.cols != b.cols:
        raise DomainError("incompatible shapes for X a = b")
    F = a.field
    # X a = b  <=>  a^T X^T = b^T
    aug = np.hstack([a.entries.T, b.entries.T])
    arr, piv = _rref_array(F, aug)
    nvar = a.rows
    if any(p >= nvar for p in piv):
        raise DomainError("X a = b has no solution")
    x = np.zeros((nvar, b.rows), dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = arr[i, nvar:]
    return MatrixFq(F, x.T, cols=nvar)


def same_row_space(a: MatrixFq, b: MatrixFq) -> bool:
    return a.cols == b.cols and row_basis(a) == row_basis(b)


def random_matrix(field: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> MatrixFq:
    return MatrixFq(field, rng.integers(0, field.q, size=(rows, cols)), cols=cols)


def random_full_rank(field: FieldSpec, rows: int, cols: int, rng: np.random.Generator) -> MatrixFq:
    """Uniform over full-row-rank matrices (rejection sampling)."""
    if rows > cols:
        raise DomainError(f"no {rows}x{cols} matrix has full row rank")
    while True:
        m = random_matrix(field, rows, cols, rng)
        if rank(m) == rows:
            return m


def random_invertible(field: FieldSpec, n: int, rng: np.random.Generator) -> MatrixFq:
    return random_full_rank(field, n, n, rng)
