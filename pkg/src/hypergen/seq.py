"""Integer-sequence primitives behind the Gale-Ryser characterisation.

Sequences are plain tuples of non-negative ints. Functions that need a
non-increasing order say so; :func:`sort_desc` produces one.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import InternalInvariantError

__all__ = [
    "sort_desc",
    "is_sorted_desc",
    "conjugate",
    "reduce_conjugate_head",
    "dominates",
    "dominance_violation",
    "is_realisable",
    "realisability_violation",
]


def _check_non_negative(values: Sequence[int]) -> None:
    for x in values:
        if x < 0:
            raise ValueError(f"sequence entries must be non-negative, got {x}")


def sort_desc(values: Sequence[int]) -> tuple[int, ...]:
    """Return ``values`` as a non-increasing tuple."""
    _check_non_negative(values)
    return tuple(sorted((int(x) for x in values), reverse=True))


def is_sorted_desc(values: Sequence[int]) -> bool:
    return all(values[i] >= values[i + 1] for i in range(len(values) - 1))


def conjugate(b: Sequence[int], n: int) -> tuple[int, ...]:
    """Conjugate of ``b`` truncated/zero-padded to length ``n``.

    Component ``i`` (0-based) counts the entries of ``b`` that are at
    least ``i + 1``. ``b`` need not be sorted.

    >>> conjugate((4, 2, 2, 1), 6)
    (4, 3, 1, 1, 0, 0)
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    counts = [0] * (n + 1)
    for x in b:
        if x < 0:
            raise ValueError(f"sequence entries must be non-negative, got {x}")
        counts[min(x, n)] += 1
    # counts[v] = #entries equal to v (capped at n); suffix sums give #entries >= i
    out = [0] * n
    running = 0
    for i in range(n, 0, -1):
        running += counts[i]
        out[i - 1] = running
    return tuple(out)


def reduce_conjugate_head(bbar: Sequence[int], b1: int) -> tuple[int, ...]:
    """Decrement the first ``b1`` components of a conjugate sequence.

    When ``bbar`` is the conjugate of a sorted ``b`` with head ``b1``, the
    result is the conjugate of ``b[1:]``.
    """
    if b1 > len(bbar):
        raise InternalInvariantError(
            f"cannot reduce {b1} components of a length-{len(bbar)} conjugate"
        )
    out = list(bbar)
    for i in range(b1):
        if out[i] == 0:
            raise InternalInvariantError(
                f"component {i + 1} of the conjugate is already zero"
            )
        out[i] -= 1
    return tuple(out)


def dominance_violation(a: Sequence[int], c: Sequence[int]) -> int | None:
    """First 1-based prefix length at which ``a`` fails to be dominated by ``c``.

    Both sequences are zero-padded to a common length ``l``. Returns ``None``
    when ``a`` is dominated by ``c``. A mismatch in totals is reported at ``l``
    (or 1 when both are empty yet differ, which cannot happen).
    """
    l = max(len(a), len(c))
    pa = pc = 0
    for k in range(l):
        pa += a[k] if k < len(a) else 0
        pc += c[k] if k < len(c) else 0
        if pa > pc:
            return k + 1
    if pa != pc:
        return max(l, 1)
    return None


def dominates(a: Sequence[int], c: Sequence[int]) -> bool:
    """True iff ``a`` is dominated by ``c`` (prefix sums ``<=``, equal totals)."""
    return dominance_violation(a, c) is None


def realisability_violation(a: Sequence[int], b: Sequence[int]) -> str | None:
    """Explain why ``(a, b)`` is not realisable, or return ``None`` if it is.

    ``a`` is the degree sequence, ``b`` the dimension sequence; neither needs
    to be sorted.
    """
    a = sort_desc(a)
    b = sort_desc(b)
    n = len(a)
    if sum(a) != sum(b):
        return f"degree total {sum(a)} differs from dimension total {sum(b)}"
    if b and b[0] > n:
        return f"an edge of dimension {b[0]} exceeds the {n} available vertices"
    k = dominance_violation(a, conjugate(b, n))
    if k is not None:
        return f"dominance fails at prefix {k}"
    return None


def is_realisable(a: Sequence[int], b: Sequence[int]) -> bool:
    """Gale-Ryser test: does a loopless hypergraph with these sequences exist?"""
    return realisability_violation(a, b) is None
