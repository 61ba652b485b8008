from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import numpy as np
import pytest


def random_realisable_pair(rng: np.random.Generator, n_max: int, m_max: int, entry_max: int):
    """Margins of a random 0/1 matrix, so the pair is realisable by construction."""
    while True:
        n = int(rng.integers(1, n_max + 1))
        m = int(rng.integers(1, m_max + 1))
        p = rng.uniform(0.1, 0.9)
        M = rng.random((m, n)) < p
        a, b = M.sum(axis=0), M.sum(axis=1)
        if a.max() <= entry_max and b.max() <= entry_max:
            return tuple(sorted(map(int, a), reverse=True)), tuple(sorted(map(int, b), reverse=True))


def count_matrices_by_columns(a, b) -> int:
    """Number of 0/1 matrices with column sums ``a`` and row sums ``b``.

    Fills one column at a time; the count of completions only depends on
    the multiset of residual row sums, which is memoised.
    """
    a = tuple(a)
    if sum(a) != sum(b):
        return 0

    @lru_cache(maxsize=None)
    def rec(j, resid):
        if j == len(a):
            return int(not any(resid))
        live = [i for i, r in enumerate(resid) if r > 0]
        total = 0
        for rows in combinations(live, a[j]):
            nxt = list(resid)
            for i in rows:
                nxt[i] -= 1
            total += rec(j + 1, tuple(sorted(nxt, reverse=True)))
        return total

    return rec(0, tuple(sorted(b, reverse=True)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, passed: bool, detail: str) -> str:
    line = f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
