"""Brute-force ground truth for small instances.

Every 0/1 matrix with the requested margins is enumerated by backtracking
over rows. Pruning uses only elementary capacity bounds, never the
Gale-Ryser test, so results can be used to check :func:`hypergen.seq.is_realisable`.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Callable, Iterator, Sequence
from itertools import combinations

import numpy as np

from .core import Hypergraph
from .errors import CapExceeded, InternalInvariantError
from .seq import sort_desc

__all__ = [
    "WORK_CAP",
    "iter_matrices",
    "enumerate_matrices",
    "has_realisation",
    "enumerate_hypergraphs",
    "exact_population_mean",
]

WORK_CAP = 30


def _check_cap(n: int, m: int, cap: int) -> None:
    if n * m > cap:
        raise CapExceeded(f"{m} x {n} incidence matrices exceed the work cap n*m <= {cap}")


def iter_matrices(a: Sequence[int], b: Sequence[int], cap: int = WORK_CAP) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield each matrix as a tuple of rows, each row the ascending column ids set to 1.

    Column ``j`` sums to ``a[j]``; rows follow the non-increasing order of ``b``.
    """
    a = tuple(int(x) for x in a)
    b = sort_desc(b)
    n, m = len(a), len(b)
    _check_cap(n, m, cap)
    if any(x < 0 for x in a) or sum(a) != sum(b) or (b and b[0] > n):
        return

    resid = list(a)
    rows: list[tuple[int, ...]] = []

    def rec(i):
        if i == m:
            yield tuple(rows)
            return
        left = m - i - 1  # rows still to fill after this one
        forced = [j for j in range(n) if resid[j] > left]
        if len(forced) > b[i] or any(resid[j] > left + 1 for j in forced):
            return
        free = [j for j in range(n) if 0 < resid[j] <= left]
        for extra in combinations(free, b[i] - len(forced)):
            row = tuple(sorted(forced + list(extra)))
            for j in row:
                resid[j] -= 1
            rows.append(row)
            yield from rec(i + 1)
            rows.pop()
            for j in row:
                resid[j] += 1

    yield from rec(0)


def enumerate_matrices(a: Sequence[int], b: Sequence[int], cap: int = WORK_CAP) -> list[np.ndarray]:
    """All ``m x n`` 0/1 matrices with column sums ``a`` and row sums ``sorted(b, reverse=True)``.

    Raises:
        CapExceeded: if ``n * m > cap``.
    """
    n = len(a)
    out = []
    for rows in iter_matrices(a, b, cap):
        M = np.zeros((len(rows), n), dtype=np.uint8)
        for i, row in enumerate(rows):
            M[i, list(row)] = 1
        out.append(M)
    return out


def has_realisation(a: Sequence[int], b: Sequence[int], cap: int = WORK_CAP) -> bool:
    return next(iter_matrices(a, b, cap), None) is not None


def _orderings(edges: Sequence[tuple[int, ...]]) -> int:
    # row orders consistent with non-increasing dimensions
    per_dim = Counter(len(e) for e in edges)
    mult = Counter(edges)
    return math.prod(math.factorial(c) for c in per_dim.values()) // math.prod(
        math.factorial(c) for c in mult.values()
    )


def enumerate_hypergraphs(a: Sequence[int], b: Sequence[int], cap: int = WORK_CAP) -> list[tuple[Hypergraph, int]]:
    """Distinct hypergraph realisations with the number of matrices giving each.

    The count equals the number of orderings of the edges that keep
    dimensions non-increasing; this is checked for every hypergraph.
    """
    n = len(a)
    groups: Counter[tuple[tuple[int, ...], ...]] = Counter()
    for rows in iter_matrices(a, b, cap):
        groups[tuple(sorted(rows))] += 1
    out = []
    for edges, count in sorted(groups.items()):
        expected = _orderings(edges)
        if count != expected:
            raise InternalInvariantError(
                f"hypergraph {edges} realised by {count} matrices, expected {expected}"
            )
        out.append((Hypergraph(n, edges), count))
    return out


def exact_population_mean(a: Sequence[int], b: Sequence[int], f: Callable[[Hypergraph], float],
                          cap: int = WORK_CAP) -> float:
    """Mean of ``f`` under the uniform distribution over distinct hypergraph realisations."""
    hs = enumerate_hypergraphs(a, b, cap)
    if not hs:
        raise ValueError("no hypergraph realises these sequences")
    return float(np.mean([f(h) for h, _ in hs]))
