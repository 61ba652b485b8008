"""Random hypergraph generation with exact generation probabilities.

Edges are generated largest dimension first. For each edge the residual
degrees are sorted (descending, ties by vertex id) and the positions where
dominance against the next conjugate would break are located; those
critical positions cut the sorted order into intervals. The edge is then
assembled interval by interval: a batch size is drawn uniformly from its
feasible window and that many positive-degree positions are drawn uniformly
without replacement. The log-probability of every choice is accumulated, so
each :class:`GenTrace` carries the exact log-probability of its edge
sequence.

Positions are 0-based; critical indices are 1-based prefix lengths, so the
interval ending at critical index ``k`` covers positions ``prev_k .. k-1``.
"""

from __future__ import annotations

import math
import os
from bisect import bisect_left
from collections import Counter
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .construct import residual_order
from .core import Hypergraph, edge_multiset_multiplicities
from .errors import InternalInvariantError, RealisabilityError
from .seq import conjugate, dominates, realisability_violation, reduce_conjugate_head, sort_desc

__all__ = [
    "CriticalIndexSet",
    "IntervalChoice",
    "EdgeChoice",
    "EdgeDraw",
    "GenTrace",
    "critical_indices",
    "sample_edge",
    "generate",
    "sample_traces",
    "trace_stream",
    "replay",
    "edge_sequence_log_prob",
    "edge_sequence_probability",
    "enumerate_choice_tree",
    "hypergraph_multiplicity",
    "log_sequence_class_size",
    "worker_count",
]


class CriticalIndexSet(NamedTuple):
    """Critical prefix lengths and their margins of violation.

    The last entry is always ``k = n`` with margin equal to the edge
    dimension; it forces the edge to reach its full size.
    """

    indices: tuple[int, ...]
    margins: tuple[int, ...]


class IntervalChoice(NamedTuple):
    start: int
    stop: int
    eligible: int
    lower: int
    upper: int
    positions: tuple[int, ...]


class EdgeChoice(NamedTuple):
    dimension: int
    intervals: tuple[IntervalChoice, ...]


class EdgeDraw(NamedTuple):
    positions: tuple[int, ...]
    log_prob: float
    intervals: tuple[IntervalChoice, ...]


@dataclass(frozen=True)
class GenTrace:
    """One run of the generator.

    ``edges`` is the edge sequence in generation order (vertex ids, ascending
    within each edge). ``choices`` is empty unless the run was recorded.
    """

    degrees: tuple[int, ...]
    dimensions: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]
    log_prob: float
    choices: tuple[EdgeChoice, ...] = ()

    @property
    def n_vertices(self) -> int:
        return len(self.degrees)

    @property
    def hypergraph(self) -> Hypergraph:
        return Hypergraph.from_edges(self.n_vertices, self.edges)


def _log_comb(n: int, k: int) -> float:
    if k == 0 or k == n:
        return 0.0
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def critical_indices(a_resid: Sequence[int], bbar_next: Sequence[int], b1: int) -> CriticalIndexSet:
    """Prefix lengths ``k < n`` where ``a_resid`` exceeds ``bbar_next``, plus ``k = n``.

    >>> critical_indices((2, 2, 1, 1), (2, 1, 0, 0), 3)
    CriticalIndexSet(indices=(2, 3, 4), margins=(1, 2, 3))
    """
    n = len(a_resid)
    indices = []
    margins = []
    pa = pb = 0
    for k in range(n - 1):
        pa += a_resid[k]
        pb += bbar_next[k]
        if pa > pb:
            indices.append(k + 1)
            margins.append(pa - pb)
    indices.append(n)
    margins.append(b1)
    return CriticalIndexSet(tuple(indices), tuple(margins))


class _Plan(NamedTuple):
    starts: list[int]
    stops: tuple[int, ...]
    caps: list[int]
    cum_caps: list[int]
    suffix_need: list[int]


def _plan(a_resid: Sequence[int], crit: CriticalIndexSet) -> _Plan:
    """Interval geometry shared by the sampler, the evaluator and the tree walk.

    Eligible positions (positive residual degree) form a prefix of the sorted
    order, so each interval's eligible set is a contiguous run starting at the
    interval start.
    """
    nnz = len(a_resid) - a_resid.count(0)
    stops = crit.indices
    margins = crit.margins
    starts = []
    caps = []
    cum_caps = []
    need = []
    start = total = 0
    for stop, margin in zip(stops, margins):
        c = (stop if stop < nnz else nnz) - start
        if c < 0:
            c = 0
        total += c
        starts.append(start)
        caps.append(c)
        cum_caps.append(total)
        need.append(margin - total)
        start = stop
    # suffix_need[i] = max_{l >= i} (margin_l - cum_caps[l]); the batch lower
    # bound in interval i is max(0, suffix_need[i] + cum_caps[i] - |e|).
    best = need[-1]
    for l in range(len(need) - 2, -1, -1):
        if need[l] > best:
            best = need[l]
        else:
            need[l] = best
    return _Plan(starts, stops, caps, cum_caps, need)


def _window(plan: _Plan, i: int, taken: int, b1: int) -> tuple[int, int]:
    lower = max(0, plan.suffix_need[i] + plan.cum_caps[i] - taken)
    upper = min(b1 - taken, plan.caps[i])
    return lower, upper


def sample_edge(a_resid: Sequence[int], crit: CriticalIndexSet, b1: int,
                rng: np.random.Generator, *, record: bool = True) -> EdgeDraw:
    """Draw the sorted positions of one edge of dimension ``b1``.

    The batch size in each interval is uniform on a window whose lower bound
    accounts for the margins still ahead and the capacity left to meet them,
    so every admissible draw can be completed. With ``record=False`` the
    per-interval record is left empty.
    """
    if b1 == 0:
        return EdgeDraw((), 0.0, ())
    starts, stops, caps, cum_caps, suffix_need = _plan(a_resid, crit)
    u = rng.random(len(caps) + b1).tolist()
    ui = 0
    taken = 0
    log_prob = 0.0
    chosen: list[int] = []
    intervals = []
    for i, cap in enumerate(caps):
        upper = b1 - taken
        if cap < upper:
            upper = cap
        lower = suffix_need[i] + cum_caps[i] - taken
        if lower < 0:
            lower = 0
        if lower > upper:
            raise InternalInvariantError(
                f"empty batch window [{lower}, {upper}] in interval {i}"
            )
        if upper == 0:
            continue
        width = upper - lower + 1
        o = lower + int(u[ui] * width)
        ui += 1
        start = starts[i]
        picked = []
        if o:
            pool = list(range(start, start + cap))
            for t in range(o):
                r = t + int(u[ui] * (cap - t))
                ui += 1
                pool[t], pool[r] = pool[r], pool[t]
            picked = pool[:o]
            chosen.extend(picked)
            taken += o
            log_prob -= _log_comb(cap, o)
        log_prob -= math.log(width)
        if record:
            intervals.append(IntervalChoice(start, stops[i], cap, lower, upper, tuple(sorted(picked))))
        if taken == b1:
            # every remaining window is [0, 0]
            break
    if taken != b1:
        raise InternalInvariantError(f"edge reached size {taken}, expected {b1}")
    chosen.sort()
    return EdgeDraw(tuple(chosen), log_prob, tuple(intervals))


def _prepare(a: Sequence[int], b: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    a = tuple(int(x) for x in a)
    b = sort_desc(b)
    reason = realisability_violation(a, b)
    if reason is not None:
        raise RealisabilityError(reason)
    return a, b


def generate(a: Sequence[int], b: Sequence[int], rng=None, *, record: bool = True) -> GenTrace:
    """Generate one random hypergraph with vertex ``i`` of degree ``a[i]``.

    Args:
        a: degree of each vertex (any order; indices are vertex ids).
        b: edge dimensions, treated as a multiset.
        rng: seed or ``numpy.random.Generator``.
        record: keep the per-interval choices in the trace.

    Raises:
        RealisabilityError: if ``(a, b)`` has no realisation.
    """
    a, b = _prepare(a, b)
    return _run(a, b, np.random.default_rng(rng), record)


def _run(a: tuple[int, ...], b: tuple[int, ...], rng: np.random.Generator, record: bool) -> GenTrace:
    n = len(a)
    resid = list(a)
    order = residual_order(resid)
    bbar = conjugate(b, n)
    edges = []
    choices = []
    log_prob = 0.0
    for j, b1 in enumerate(b):
        bbar_next = reduce_conjugate_head(bbar, b1)
        a_sorted = [resid[v] for v in order]
        draw = sample_edge(a_sorted, critical_indices(a_sorted, bbar_next, b1), b1, rng, record=record)
        edge = [order[p] for p in draw.positions]
        for v in edge:
            resid[v] -= 1
        edge.sort()
        edges.append(tuple(edge))
        log_prob += draw.log_prob
        if record:
            choices.append(EdgeChoice(b1, draw.intervals))
        order = residual_order(resid)
        bbar = bbar_next
        assert dominates([resid[v] for v in order], bbar), f"dominance lost after edge {j}"
    return GenTrace(a, b, tuple(edges), log_prob, tuple(choices))


def trace_stream(a: Sequence[int], b: Sequence[int], n_samples: int, rng=None) -> Iterator[GenTrace]:
    """Yield ``n_samples`` unrecorded traces drawn from one random stream.

    Cheaper than :func:`sample_traces` for large Monte Carlo loops, at the
    cost of samples not being individually reproducible.
    """
    a, b = _prepare(a, b)
    rng = np.random.default_rng(rng)
    for _ in range(n_samples):
        yield _run(a, b, rng, False)


def worker_count(workers: int | None = None) -> int:
    """Resolve a worker count, capped by ``HYPERGEN_THREADS`` when set."""
    cap = os.environ.get("HYPERGEN_THREADS")
    if workers is None:
        workers = int(cap) if cap else 1
    elif cap:
        workers = min(workers, int(cap))
    return max(1, workers)


def sample_traces(a: Sequence[int], b: Sequence[int], n_samples: int, seed=0, *,
                  workers: int | None = None, record: bool = False) -> list[GenTrace]:
    """Independent traces, sample ``i`` driven by the ``i``-th spawned seed.

    The output depends only on ``seed``, never on ``workers``.
    """
    a, b = _prepare(a, b)
    children = np.random.SeedSequence(seed).spawn(n_samples)

    def one(child):
        return _run(a, b, np.random.default_rng(child), record)

    workers = worker_count(workers)
    if workers == 1 or n_samples < 2:
        return [one(c) for c in children]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(one, children))


def replay(a: Sequence[int], b: Sequence[int], choices: Sequence[EdgeChoice]) -> tuple[tuple[int, ...], ...]:
    """Rebuild the edge sequence of a recorded run from its choices alone."""
    a, b = _prepare(a, b)
    if len(choices) != len(b):
        raise ValueError(f"expected {len(b)} edge choices, got {len(choices)}")
    resid = list(a)
    order = residual_order(resid)
    edges = []
    for b1, choice in zip(b, choices):
        if choice.dimension != b1:
            raise ValueError(f"choice for dimension {choice.dimension} where {b1} was due")
        edge = []
        for interval in choice.intervals:
            for p in interval.positions:
                edge.append(order[p])
        for v in edge:
            resid[v] -= 1
        edges.append(tuple(sorted(edge)))
        order = residual_order(resid)
    return tuple(edges)


def edge_sequence_log_prob(a: Sequence[int], b: Sequence[int], edges: Sequence[Sequence[int]]) -> float:
    """Log-probability that :func:`generate` emits exactly this edge sequence.

    Evaluated from the edges themselves, without any random draws. Returns
    ``-inf`` for sequences the generator cannot produce.
    """
    a, b = _prepare(a, b)
    edges = [tuple(e) for e in edges]
    if len(edges) != len(b):
        return -math.inf
    n = len(a)
    resid = list(a)
    order = residual_order(resid)
    bbar = conjugate(b, n)
    total = 0.0
    for b1, edge in zip(b, edges):
        if len(set(edge)) != b1 or len(edge) != b1:
            return -math.inf
        bbar_next = reduce_conjugate_head(bbar, b1)
        a_sorted = [resid[v] for v in order]
        if b1:
            where = {v: p for p, v in enumerate(order)}
            try:
                positions = sorted(where[v] for v in edge)
            except KeyError:
                return -math.inf
            if any(a_sorted[p] == 0 for p in positions):
                return -math.inf
            plan = _plan(a_sorted, critical_indices(a_sorted, bbar_next, b1))
            taken = 0
            for i, cap in enumerate(plan.caps):
                lo, hi = plan.starts[i], plan.stops[i]
                o = bisect_left(positions, hi) - bisect_left(positions, lo)
                lower, upper = _window(plan, i, taken, b1)
                if not lower <= o <= upper:
                    return -math.inf
                if upper == 0:
                    continue
                total -= math.log(upper - lower + 1) + _log_comb(cap, o)
                taken += o
        for v in edge:
            resid[v] -= 1
        order = residual_order(resid)
        bbar = bbar_next
    return total


def edge_sequence_probability(trace: GenTrace) -> float:
    """Log-probability of a trace's edge sequence, recomputed from its edges."""
    return edge_sequence_log_prob(trace.degrees, trace.dimensions, trace.edges)


def enumerate_choice_tree(a: Sequence[int], b: Sequence[int]) -> Iterator[tuple[tuple[tuple[int, ...], ...], float]]:
    """Walk every branch of the generator's choice tree.

    Yields ``(edge_sequence, log_prob)`` once per reachable edge sequence.
    Exponential in the instance size; meant for tiny inputs.
    """
    a, b = _prepare(a, b)
    n = len(a)

    def edge_options(a_sorted, bbar_next, b1):
        if b1 == 0:
            yield (), 0.0
            return
        plan = _plan(a_sorted, critical_indices(a_sorted, bbar_next, b1))

        def rec(i, taken, picked, lp):
            if i == len(plan.caps):
                if taken != b1:
                    raise InternalInvariantError("choice tree leaf with wrong edge size")
                yield tuple(picked), lp
                return
            lower, upper = _window(plan, i, taken, b1)
            if lower > upper:
                raise InternalInvariantError(f"empty batch window in interval {i}")
            if upper == 0:
                yield from rec(i + 1, taken, picked, lp)
                return
            cap = plan.caps[i]
            start = plan.starts[i]
            width = math.log(upper - lower + 1)
            for o in range(lower, upper + 1):
                step = width + _log_comb(cap, o)
                for combo in combinations(range(start, start + cap), o):
                    yield from rec(i + 1, taken + o, picked + list(combo), lp - step)

        yield from rec(0, 0, [], 0.0)

    def walk(resid, j, bbar, prefix, lp):
        if j == len(b):
            yield tuple(prefix), lp
            return
        b1 = b[j]
        order = residual_order(resid)
        a_sorted = [resid[v] for v in order]
        bbar_next = reduce_conjugate_head(bbar, b1)
        for positions, elp in edge_options(a_sorted, bbar_next, b1):
            nxt = list(resid)
            edge = []
            for p in positions:
                nxt[order[p]] -= 1
                edge.append(order[p])
            yield from walk(nxt, j + 1, bbar_next, prefix + [tuple(sorted(edge))], lp + elp)

    yield from walk(list(a), 0, conjugate(b, n), [], 0.0)


def hypergraph_multiplicity(h: Hypergraph) -> float:
    """``log(m! / prod mult!)``: orderings of the edges giving the same hypergraph."""
    mult = edge_multiset_multiplicities(h)
    return math.lgamma(h.n_edges + 1) - sum(math.lgamma(c + 1) for c in mult.values())


def log_sequence_class_size(h: Hypergraph) -> float:
    """Log of the number of edge sequences the generator could emit for ``h``.

    The generator orders edges by non-increasing dimension, so only
    reorderings within each dimension class count. This differs from
    :func:`hypergraph_multiplicity` by a constant depending only on the
    dimension sequence.
    """
    per_dim = Counter(len(e) for e in h.edges)
    mult = edge_multiset_multiplicities(h)
    return (sum(math.lgamma(c + 1) for c in per_dim.values())
            - sum(math.lgamma(c + 1) for c in mult.values()))
