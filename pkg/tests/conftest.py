"""Shared helpers: pure-Python brute-force oracles independent of the numpy paths."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from foldedcodes import fqmat
from foldedcodes.code import LinearCode
from foldedcodes.gf import GF


def brute_span(c: LinearCode) -> set[tuple[int, ...]]:
    """All codewords, one message at a time, with scalar field arithmetic."""
    F, G = c.field, c.generator.entries.tolist()
    words = set()
    for msg in itertools.product(range(F.q), repeat=c.k):
        w = [0] * c.length
        for a, row in zip(msg, G):
            if a:
                w = [F.add(x, F.mul(a, y)) for x, y in zip(w, row)]
        words.add(tuple(w))
    return words


def brute_weight(w, r: int) -> int:
    return sum(any(w[i : i + r]) for i in range(0, len(w), r))


def brute_distance(c: LinearCode) -> int | None:
    ws = [brute_weight(w, c.r) for w in brute_span(c) if any(w)]
    return min(ws) if ws else None


def brute_rank(F, rows) -> int:
    """log_q of the span size."""
    span = {tuple([0] * len(rows[0]))} if rows else {()}
    for row in rows:
        span = {tuple(F.add(x, F.mul(a, y)) for x, y in zip(s, row)) for s in span for a in range(F.q)}
    return round(np.log(len(span)) / np.log(F.q))


def random_code(F, n: int, r: int, k: int, rng) -> LinearCode:
    return LinearCode(F, n, r, fqmat.random_full_rank(F, k, r * n, rng))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=[2, 3, 4, 5, 8, 9])
def small_field(request):
    return GF(request.param)
