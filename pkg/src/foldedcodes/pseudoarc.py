"""Pseudo arcs: tuples of r-dimensional subspaces of F_q^m, and their
correspondence with codes through parity-check matrices."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import NamedTuple

from foldedcodes import fqmat
from foldedcodes.code import Isometry, LinearCode, apply_isometry
from foldedcodes.errors import BudgetExceededError, DomainError
from foldedcodes.fqmat import MatrixFq
from foldedcodes.gf import FieldSpec

DEFAULT_MAX_CHECKS = 1 << 20


@dataclass(frozen=True)
class PseudoArc:
    """Subspaces H_1, ..., H_n of F_q^m, each given by an m x r basis matrix (columns)."""

    field: FieldSpec
    m: int
    r: int
    subspaces: tuple[MatrixFq, ...]

    def __post_init__(self):
        object.__setattr__(self, "subspaces", tuple(self.subspaces))
        if not self.subspaces:
            raise DomainError("a pseudo arc needs at least one subspace")
        for i, H in enumerate(self.subspaces):
            if H.field != self.field or H.shape != (self.m, self.r):
                raise DomainError(f"subspace {i} is not given by an {self.m}x{self.r} matrix over {self.field}")
            if fqmat.rank(H) != self.r:
                raise DomainError(f"subspace {i} has dimension {fqmat.rank(H)} < r = {self.r}")

    @property
    def n(self) -> int:
        return len(self.subspaces)

    def matrix(self) -> MatrixFq:
        """The m x rn matrix (H_1 | ... | H_n)."""
        return fqmat.hstack(list(self.subspaces))

    def is_nondegenerate(self) -> bool:
        return fqmat.rank(self.matrix()) == self.m

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "m": self.m,
            "r": self.r,
            "subspaces": [H.to_json() for H in self.subspaces],
        }

    @classmethod
    def from_json(cls, obj: dict) -> PseudoArc:
        F = FieldSpec.from_json(obj["field"])
        r = int(obj["r"])
        subs = tuple(MatrixFq.from_json(F, H, cols=r) for H in obj["subspaces"])
        return cls(F, int(obj["m"]), r, subs)


def load_arc(path: str | Path) -> PseudoArc:
    with open(path) as fh:
        return PseudoArc.from_json(json.load(fh))


def save_arc(a: PseudoArc, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(a.to_json(), fh)
        fh.write("\n")


class ArcParams(NamedTuple):
    n: int
    r: int
    m: int
    t: int
    nondegenerate: bool


def _in_direct_sum(a: PseudoArc, t: int, budget: list[int]) -> bool:
    """Every t of the subspaces are in direct sum."""
    for S in itertools.combinations(range(a.n), t):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceededError("direct-sum checks exceed the configured budget")
        if fqmat.rank(fqmat.hstack([a.subspaces[i] for i in S])) != t * a.r:
            return False
    return True


def arc_params(a: PseudoArc, max_checks: int = DEFAULT_MAX_CHECKS) -> ArcParams:
    """(n, r, m, t, nondegenerate) with t the largest size of subsets all in direct sum.

    The direct-sum property is monotone in t, so the search walks up from
    t = 1 and down from min(n, m // r) at once, always taking the cheaper
    next subset size.
    """
    top = min(a.n, a.m // a.r)
    budget = [max_checks]
    lo, hi = 1, top  # P(lo) known true; answer in [lo, hi]
    while lo < hi:
        if comb(a.n, lo + 1) <= comb(a.n, hi):
            if _in_direct_sum(a, lo + 1, budget):
                lo += 1
            else:
                hi = lo
        else:
            if _in_direct_sum(a, hi, budget):
                lo = hi
            else:
                hi -= 1
    return ArcParams(a.n, a.r, a.m, lo, a.is_nondegenerate())


def arc_from_code(c: LinearCode) -> PseudoArc:
    """Column blocks of the canonical parity-check matrix, as subspaces of F_q^{rn-k}."""
    m = c.length - c.k
    if m == 0:
        raise DomainError("the full space has no parity checks (m = 0)")
    if m < c.r:
        raise DomainError(f"m = rn - k = {m} < r = {c.r}: blocks cannot span r-dimensional subspaces")
    H = c.parity
    subs = []
    for i in range(c.n):
        B = fqmat.block_submatrix(H, [i], c.r)
        if fqmat.rank(B) != c.r:
            raise DomainError(f"parity-check block {i} has rank {fqmat.rank(B)} < r = {c.r} (the code has d = 1)")
        subs.append(B)
    return PseudoArc(c.field, m, c.r, tuple(subs))


def code_from_arc(a: PseudoArc) -> LinearCode:
    """The code with parity-check matrix (H_1 | ... | H_n); may be the zero code."""
    H = a.matrix()
    if fqmat.rank(H) != a.m:
        raise DomainError("degenerate pseudo arc: the subspaces do not span F_q^m")
    return LinearCode(a.field, a.n, a.r, fqmat.kernel_basis(H))


@dataclass(frozen=True)
class EquivalenceWitness:
    """B H = H' P_sigma Diag(A_1, ..., A_n) for parity-check matrices H, H'."""

    B: MatrixFq
    H: MatrixFq
    H_prime: MatrixFq
    iso: Isometry  # (sigma, A_i) on the right-hand side

    def verify(self) -> bool:
        lhs = self.B @ self.H
        rhs = self.H_prime @ self.iso.matrix()
        return fqmat.is_invertible(self.B) and lhs == rhs


def equivalence_witness(c: LinearCode, iso: Isometry) -> EquivalenceWitness:
    """Witness matrix B relating the parity checks of c and apply_isometry(c, iso).

    If C' = C M then H' M^T spans the same space as H, and M^T is the matrix
    of iso.transpose(); B is found by solving B H = H' M^T.
    """
    c2 = apply_isometry(c, iso)
    H, H2 = c.parity, c2.parity
    rhs_iso = iso.transpose()
    R = H2 @ rhs_iso.matrix()
    B = fqmat.solve_left(H, R)
    w = EquivalenceWitness(B, H, H2, rhs_iso)
    if not w.verify():
        raise DomainError("no invertible witness B found")  # pragma: no cover
    return w


def arcs_equivalent_via(a: PseudoArc, b: PseudoArc, B: MatrixFq, sigma) -> bool:
    """Check B H_i = H'_{sigma(i)} as subspaces for every i, with B invertible."""
    if (a.n, a.m, a.r) != (b.n, b.m, b.r) or not fqmat.is_invertible(B):
        return False
    for i, s in enumerate(sigma):
        img = B @ a.subspaces[i]
        if fqmat.rank(fqmat.hstack([img, b.subspaces[s]])) != a.r:
            return False
    return True
