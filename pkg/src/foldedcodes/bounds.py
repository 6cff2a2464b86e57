"""Length and distance bounds for (dually) QMDS codes, and the density experiment.

Every bound is computed in exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from foldedcodes import fqmat
from foldedcodes.code import LinearCode
from foldedcodes.errors import DomainError
from foldedcodes.gf import GF
from foldedcodes.qmds import ceil_div, minors_dually_qmds
from foldedcodes.wdist import binom


def length_bound_hamming(d: int, q: int, r: int, k: int) -> int:
    """Largest n allowed for a code of size q^k with distance d = n - ceil(k/r) + 1 >= 3."""
    if d < 3:
        raise DomainError(f"the Hamming-type length bound needs d >= 3, got d = {d}")
    if k < 1 or r < 1 or q < 2:
        raise DomainError("need k >= 1, r >= 1, q >= 2")
    return d - 3 + q ** (r * ceil_div(k, r) - k) * (q**r + 1)


def epsilon_delta(r: int, k: int) -> tuple[int, int]:
    eps = r - (r * ceil_div(k, r) - k)
    delta = r - (k - r * (k // r))
    return eps, delta


@dataclass(frozen=True)
class Bound:
    name: str
    value: int
    applicable: bool | None  # None: depends on an n that was not supplied
    hypothesis: str


@dataclass(frozen=True)
class BoundReport:
    q: int
    r: int
    k: int
    n: int | None
    epsilon: int
    delta: int
    items: tuple[Bound, ...] = field(default=())

    def get(self, name: str) -> Bound:
        for b in self.items:
            if b.name == name:
                return b
        raise KeyError(name)

    def to_json(self) -> dict:
        return asdict(self)

    def table(self) -> str:
        head = f"q={self.q} r={self.r} k={self.k} n={self.n if self.n is not None else '-'}"
        head += f"  epsilon={self.epsilon} delta={self.delta}"
        lines = [head]
        for b in self.items:
            flag = {True: "applies", False: "n/a", None: "needs n"}[b.applicable]
            lines.append(f"  {b.name:<22} <= {b.value:<8} [{flag}] ({b.hypothesis})")
        return "\n".join(lines)


def _item1(q: int, r: int, eps: int) -> int:
    return q**r - 1 + (q**r - 1) // (q**eps - 1)


def dually_qmds_bounds(q: int, r: int, k: int, n: int | None = None) -> BoundReport:
    """Bounds on d, d_perp and n for dually QMDS codes with these (q, r, k[, n])."""
    if q < 2 or r < 1 or k < 1:
        raise DomainError("need q >= 2, r >= 1, k >= 1")
    eps, delta = epsilon_delta(r, k)
    upper_ok = None if n is None else k < r * (n - 1)
    items = [
        Bound("d", _item1(q, r, eps), k > r, "k > r"),
        Bound("d_perp", _item1(q, r, delta), upper_ok, "k < r(n-1)"),
    ]
    if k % r == 0:
        n_bound = 2 * q**r - 2
    else:
        n_bound = 2 * q**r - 3 + (q**r - 1) // (q**eps - 1) + (q**r - 1) // (q**delta - 1)
    items.append(Bound("n", n_bound, None if n is None else (r < k and upper_ok), "r < k < r(n-1)"))
    if q == 2:
        items.append(Bound("n_binary_qmds", 2 ** (r + 1) - 1, r + 1 <= k <= 2 * r, "q = 2, r+1 <= k <= 2r, d = n-1"))
        items.append(
            Bound(
                "n_binary_dually_qmds",
                (4 * (2**r - 1)) // 3 + 1,
                r >= 2 and r + 2 <= k <= 2 * r,
                "q = 2, r >= 2, r+2 <= k <= 2r, d = n-1",
            )
        )
    return BoundReport(q, r, k, n, eps, delta, tuple(items))


def density_constant(n: int, r: int, k: int) -> int:
    """Degree of the product of all minors tested for the dually-QMDS property."""
    if not 1 <= k <= r * n:
        raise DomainError(f"k = {k} outside [1, rn = {r * n}]")
    up, lo = ceil_div(k, r), k // r
    return k * binom(n, up) * binom(r * up, k) + r * lo * binom(n, lo) * binom(k, r * lo)


@dataclass(frozen=True)
class DensityResult:
    n: int
    r: int
    k: int
    q: int
    trials: int
    seed: int
    successes: int
    empirical: float
    theoretical_bound: float
    vacuous: bool
    sigma: float

    def to_json(self) -> dict:
        return asdict(self)


def density_experiment(n: int, r: int, k: int, q: int, trials: int, seed: int) -> DensityResult:
    """Fraction of uniformly random [n, r, k] codes over F_q that are dually QMDS.

    Trial t draws from numpy's PCG64 seeded with (seed, t), so results do not
    depend on how trials are scheduled.
    """
    if trials < 1:
        raise DomainError("trials must be >= 1")
    if not 1 <= k <= r * n - 1:
        raise DomainError(f"need 1 <= k <= rn - 1, got k = {k}, rn = {r * n}")
    F = GF(q)
    hits = 0
    for t in range(trials):
        rng = np.random.default_rng([seed, t])
        G = fqmat.random_full_rank(F, k, r * n, rng)
        if minors_dually_qmds(LinearCode(F, n, r, G)):
            hits += 1
    C = density_constant(n, r, k)
    bound = 1 - C / q
    sigma = math.sqrt(max(bound, 0.0) * (1 - max(bound, 0.0)) / trials)
    return DensityResult(n, r, k, q, trials, seed, hits, hits / trials, bound, C >= q, sigma)
