"""Hypergraph container and the sequence/graph views derived from it."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

__all__ = [
    "Hypergraph",
    "SortedSequence",
    "degrees",
    "degree_sequence",
    "dimension_sequence",
    "incidence_matrix",
    "project_to_simple_graph",
    "edge_multiset_multiplicities",
]

Edge = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """Loopless hypergraph on vertices ``0 .. n_vertices - 1``.

    ``edges`` is a multiset: each edge is stored as an ascending tuple of
    distinct vertex ids and the edges themselves are kept in sorted order,
    so two hypergraphs compare equal iff their edge multisets coincide.
    Use :meth:`from_edges` to build one from arbitrary iterables.
    """

    n_vertices: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        for e in self.edges:
            if len(set(e)) != len(e):
                raise ValueError(f"edge {e} repeats a vertex (loops are not allowed)")
            for v in e:
                if not 0 <= v < self.n_vertices:
                    raise ValueError(f"vertex {v} out of range [0, {self.n_vertices})")
            if list(e) != sorted(e):
                raise ValueError("edges must be ascending tuples; use Hypergraph.from_edges")
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edge multiset must be sorted; use Hypergraph.from_edges")

    @classmethod
    def from_edges(cls, n_vertices: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        canon = []
        for e in edges:
            e = [int(v) for v in e]
            if len(set(e)) != len(e):
                raise ValueError(f"edge {tuple(e)} repeats a vertex (loops are not allowed)")
            canon.append(tuple(sorted(e)))
        return cls(n_vertices, tuple(sorted(canon)))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"Hypergraph(n_vertices={self.n_vertices}, edges={list(self.edges)})"


class SortedSequence(NamedTuple):
    """Non-increasing sequence plus the vertex found at each sorted position."""

    values: tuple[int, ...]
    order: tuple[int, ...]


def degrees(h: Hypergraph) -> tuple[int, ...]:
    """Per-vertex degree, indexed by vertex id."""
    d = [0] * h.n_vertices
    for e in h.edges:
        for v in e:
            d[v] += 1
    return tuple(d)


def degree_sequence(h: Hypergraph) -> SortedSequence:
    """Sorted degree sequence; ties keep ascending vertex id."""
    d = degrees(h)
    order = tuple(sorted(range(h.n_vertices), key=lambda v: (-d[v], v)))
    return SortedSequence(tuple(d[v] for v in order), order)


def dimension_sequence(h: Hypergraph) -> tuple[int, ...]:
    return tuple(sorted((len(e) for e in h.edges), reverse=True))


def incidence_matrix(h: Hypergraph) -> np.ndarray:
    """``m x n`` 0/1 matrix with ``M[i, j] = 1`` iff vertex ``j`` is in edge ``i``."""
    M = np.zeros((h.n_edges, h.n_vertices), dtype=np.uint8)
    for i, e in enumerate(h.edges):
        M[i, list(e)] = 1
    return M


def project_to_simple_graph(h: Hypergraph) -> list[set[int]]:
    """Clique expansion as an adjacency list.

    Two vertices are adjacent iff some edge contains both. Parallel edges
    collapse and there are no self-loops.
    """
    adj: list[set[int]] = [set() for _ in range(h.n_vertices)]
    for e in h.edges:
        for i, u in enumerate(e):
            for v in e[i + 1:]:
                adj[u].add(v)
                adj[v].add(u)
    return adj


def edge_multiset_multiplicities(h: Hypergraph) -> dict[Edge, int]:
    return dict(Counter(h.edges))
