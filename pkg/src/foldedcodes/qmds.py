"""Singleton-type bounds and MDS / QMDS / dually-QMDS classification."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass

from foldedcodes import fqmat
from foldedcodes.code import (
    LinearCode,
    distance_by_rank,
    dual,
    dual_distance_by_rank,
    min_distance,
)
from foldedcodes.errors import BudgetExceededError, DomainError


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class SingletonReport:
    n: int
    r: int
    k: int
    k_max: int | None  # r(n - d + 1), only when d is known
    d_max: int
    dperp_max: int


def singleton_bounds(n: int, r: int, k: int, d: int | None = None) -> SingletonReport:
    if not 1 <= k <= r * n:
        raise DomainError(f"k = {k} outside [1, rn = {r * n}]")
    k_max = r * (n - d + 1) if d is not None else None
    return SingletonReport(n, r, k, k_max, n - ceil_div(k, r) + 1, k // r + 1)


def qmds_distance(n: int, r: int, k: int) -> int:
    return n - ceil_div(k, r) + 1


@dataclass(frozen=True)
class Classification:
    n: int
    r: int
    k: int
    d: int
    d_perp: int
    is_mds: bool
    is_qmds: bool
    is_dually_qmds: bool
    divisible: bool
    method: str

    @property
    def label(self) -> str:
        if self.is_mds:
            return "MDS"
        if self.is_dually_qmds:
            return "dually-QMDS"
        if self.is_qmds:
            return "QMDS"
        return "none"

    @property
    def type_str(self) -> str:
        return f"[{self.n},{self.r},{self.k},{self.d}]"

    def __str__(self):
        return f"{self.label} {self.type_str}"

    def to_json(self) -> dict:
        out = asdict(self)
        out["class"] = self.label
        return out


def _minor_ranks_ok(G: fqmat.MatrixFq, n: int, r: int, blocks: int, target: int) -> bool:
    if blocks == 0:
        return True
    for S in itertools.combinations(range(n), blocks):
        if fqmat.rank(fqmat.block_submatrix(G, S, r)) != target:
            return False
    return True


def minors_qmds(c: LinearCode) -> bool:
    """Every ceil(k/r) column blocks of the generator have rank k."""
    return c.k == 0 or _minor_ranks_ok(c.canonical, c.n, c.r, ceil_div(c.k, c.r), c.k)


def minors_dually_qmds(c: LinearCode) -> bool:
    """QMDS, and every floor(k/r) column blocks of the generator have rank r*floor(k/r)."""
    m = c.k // c.r
    return minors_qmds(c) and _minor_ranks_ok(c.canonical, c.n, c.r, m, c.r * m)


def classify(c: LinearCode, method: str = "by_minors", budget: int | None = None) -> Classification:
    """Classify a code with 1 <= k <= rn - 1.

    ``by_distance`` enumerates the code and its dual; ``by_minors`` checks the
    ranks of block submatrices of the generator and never enumerates.
    """
    n, r, k = c.n, c.r, c.k
    if not 1 <= k <= r * n - 1:
        raise DomainError(f"classification needs 1 <= k <= rn - 1, got k = {k}, rn = {r * n}")
    target_d = qmds_distance(n, r, k)
    target_dperp = k // r + 1
    G = c.canonical
    if method == "by_distance":
        d = min_distance(c, "exhaustive", budget)
        d_perp = min_distance(dual(c), "exhaustive", budget)
        is_qmds = d == target_d
        is_dq = is_qmds and d_perp == target_dperp
    elif method == "by_minors":
        is_qmds = minors_qmds(c)
        is_dq = is_qmds and minors_dually_qmds(c)
        d = distance_by_rank(G, n, r)
        d_perp = dual_distance_by_rank(G, n, r)
    else:
        raise DomainError(f"unknown classification method {method!r}")
    return Classification(
        n=n,
        r=r,
        k=k,
        d=d,
        d_perp=d_perp,
        is_mds=is_qmds and k % r == 0,
        is_qmds=is_qmds,
        is_dually_qmds=is_dq,
        divisible=k % r == 0,
        method=method,
    )


def classify_auto(c: LinearCode, budget: int | None = None) -> Classification:
    """by_distance when both the code and its dual fit the budget, otherwise by_minors."""
    try:
        return classify(c, "by_distance", budget)
    except BudgetExceededError:
        return classify(c, "by_minors")


@dataclass(frozen=True)
class RestrictionProfile:
    n: int
    r: int
    k: int
    rows: tuple[tuple[tuple[int, ...], int, int], ...]  # (I, dim C^I, dim C_I)
    holds: bool
    first_failure: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "k": self.k,
            "holds": self.holds,
            "first_failure": list(self.first_failure) if self.first_failure is not None else None,
            "rows": [{"I": list(I), "dim_restricted": a, "dim_shortened": b} for I, a, b in self.rows],
        }


def expected_restricted_dim(n: int, r: int, k: int, size: int) -> int:
    return k if r * size >= k else r * size


def expected_shortened_dim(n: int, r: int, k: int, size: int) -> int:
    return k - r * (n - size) if r * (n - size) <= k else 0


def restriction_profile(c: LinearCode, max_n: int = 20) -> RestrictionProfile:
    """dim C^I and dim C_I for every nonempty I, checked against the dually-QMDS pattern.

    dim C^I = rank(G_I); dim C_I = k - rank(G_{[n] minus I}).
    """
    n, r, k = c.n, c.r, c.k
    if n > max_n:
        raise BudgetExceededError(f"2^{n} subsets exceeds the subset budget (n <= {max_n})")
    G = c.canonical
    rank_cache: dict[tuple[int, ...], int] = {(): 0}

    def rk(S):
        if S not in rank_cache:
            rank_cache[S] = fqmat.rank(fqmat.block_submatrix(G, S, r)) if k else 0
        return rank_cache[S]

    rows = []
    first = None
    for size in range(1, n + 1):
        for I in itertools.combinations(range(n), size):
            comp = tuple(i for i in range(n) if i not in I)
            a, b = rk(I), k - rk(comp)
            rows.append((I, a, b))
            ok = a == expected_restricted_dim(n, r, k, size) and b == expected_shortened_dim(n, r, k, size)
            if not ok and first is None:
                first = I
    return RestrictionProfile(n, r, k, tuple(rows), first is None, first)
