"""Deterministic greedy construction of a single hypergraph realisation."""

from __future__ import annotations

from collections.abc import Sequence

from .core import Hypergraph
from .errors import InternalInvariantError, RealisabilityError
from .seq import conjugate, dominates, realisability_violation, sort_desc

__all__ = ["construct_initial", "residual_order"]


def residual_order(resid: Sequence[int]) -> list[int]:
    """Vertex ids sorted by residual degree (descending), ties by ascending id."""
    return sorted(range(len(resid)), key=lambda v: (-resid[v], v))


def construct_initial(a: Sequence[int], b: Sequence[int]) -> Hypergraph:
    """Build one hypergraph whose vertex ``i`` has degree ``a[i]``.

    Edges are built largest dimension first; each takes the vertices of
    currently largest residual degree, ties broken by ascending vertex id.
    ``a`` may be in any order (vertex ids are its indices); ``b`` is treated
    as a multiset.

    Raises:
        RealisabilityError: if no realisation of ``(a, b)`` exists.
    """
    a = tuple(int(x) for x in a)
    b = sort_desc(b)
    reason = realisability_violation(a, b)
    if reason is not None:
        raise RealisabilityError(reason)

    n = len(a)
    resid = list(a)
    order = residual_order(resid)
    edges = []
    for j, b1 in enumerate(b):
        chosen = order[:b1]
        if b1 and resid[chosen[-1]] == 0:
            raise InternalInvariantError(
                f"edge {j}: fewer than {b1} vertices with positive residual degree"
            )
        for v in chosen:
            resid[v] -= 1
        edges.append(chosen)
        order = residual_order(resid)
        assert dominates([resid[v] for v in order], conjugate(b[j + 1:], n)), (
            f"residual sequences not realisable after edge {j}"
        )
    return Hypergraph.from_edges(n, edges)
