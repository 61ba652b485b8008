from __future__ import annotations

import itertools
import math
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypergen.core import Hypergraph, degree_sequence, dimension_sequence
from hypergen.errors import RealisabilityError
from hypergen.gen import (
    CriticalIndexSet,
    critical_indices,
    edge_sequence_log_prob,
    edge_sequence_probability,
    enumerate_choice_tree,
    generate,
    hypergraph_multiplicity,
    log_sequence_class_size,
    replay,
    sample_edge,
    sample_traces,
    trace_stream,
    worker_count,
)
from hypergen.oracle import enumerate_hypergraphs
from hypergen.seq import conjugate, is_realisable, reduce_conjugate_head

from conftest import random_realisable_pair

SMALL = [
    ((2, 2, 1, 1), (3, 2, 1)),
    ((2, 2, 2), (3, 2, 1)),
    ((1, 1, 1), (2, 1)),
    ((2, 1, 1), (2, 1, 1)),
    ((2, 2, 1, 1, 1), (3, 2, 2)),
    ((3, 2, 2, 1), (3, 3, 2)),
    ((1, 1, 1, 1), (2, 2)),
]


@pytest.mark.parametrize("a, bbar, b1, indices, margins", [
    ((2, 2, 1, 1), (2, 1, 0, 0), 3, (2, 3, 4), (1, 2, 3)),
    ((1, 1), (1, 0), 1, (2,), (1,)),
    ((1,), (0,), 1, (1,), (1,)),
])
def test_critical_index_examples(a, bbar, b1, indices, margins):
    assert critical_indices(a, bbar, b1) == CriticalIndexSet(indices, margins)


def test_forced_single_vertex_edge():
    draw = sample_edge((1,), CriticalIndexSet((1,), (1,)), 1, np.random.default_rng(0))
    assert draw.positions == (0,)
    assert draw.log_prob == 0.0


def test_empty_edge():
    draw = sample_edge((1, 1), CriticalIndexSet((2,), (0,)), 0, np.random.default_rng(0))
    assert draw.positions == () and draw.log_prob == 0.0


def test_sample_edge_law_matches_reported_probability():
    a = (2, 2, 1, 1)
    crit = critical_indices(a, reduce_conjugate_head(conjugate((3, 2, 1), 4), 3), 3)
    assert crit == CriticalIndexSet((2, 3, 4), (1, 2, 3))
    rng = np.random.default_rng(1)
    n = 40_000
    counts = Counter()
    probs = {}
    for _ in range(n):
        d = sample_edge(a, crit, 3, rng)
        assert len(d.positions) == 3
        counts[d.positions] += 1
        probs.setdefault(d.positions, d.log_prob)
        assert probs[d.positions] == d.log_prob
    assert math.isclose(sum(math.exp(lp) for lp in probs.values()), 1.0, abs_tol=1e-12)
    for pos, c in counts.items():
        p = math.exp(probs[pos])
        assert abs(c / n - p) < 4 * math.sqrt(p * (1 - p) / n)


@pytest.mark.parametrize("a, b, edges", [
    ((2, 2), (2, 2), ((0, 1), (0, 1))),
    ((1, 1, 1), (3,), ((0, 1, 2),)),
    ((1,), (1,), ((0,),)),
])
def test_unique_realisation_has_probability_one(a, b, edges):
    for seed in range(5):
        t = generate(a, b, seed)
        assert t.edges == edges
        assert t.log_prob == 0.0
        assert edge_sequence_probability(t) == 0.0


def test_unrealisable_input_raises():
    with pytest.raises(RealisabilityError):
        generate((3, 1), (2, 2), 0)


def test_instance_needing_lookahead_lower_bound():
    # a plain max(0, margin - taken) lower bound dead-ends here
    for seed in range(200):
        t = generate((2, 2, 2), (3, 2, 1), seed)
        assert degree_sequence(t.hypergraph).values == (2, 2, 2)


@pytest.mark.parametrize("a, b", SMALL)
def test_choice_tree_is_a_probability_distribution(a, b):
    leaves = list(enumerate_choice_tree(a, b))
    assert math.isclose(math.fsum(math.exp(lp) for _, lp in leaves), 1.0, abs_tol=1e-9)
    assert len({e for e, _ in leaves}) == len(leaves)
    for edges, lp in leaves:
        h = Hypergraph.from_edges(len(a), edges)
        assert degree_sequence(h).values == a and dimension_sequence(h) == b
        assert math.isclose(edge_sequence_log_prob(a, b, edges), lp, abs_tol=1e-12)


@pytest.mark.parametrize("a, b", SMALL)
def test_choice_tree_covers_oracle(a, b):
    tree = {Hypergraph.from_edges(len(a), e) for e, _ in enumerate_choice_tree(a, b)}
    assert tree == {h for h, _ in enumerate_hypergraphs(a, b)}


def test_tree_sequences_per_hypergraph_match_class_size():
    a, b = (1, 1, 1, 1), (2, 2)
    per_h = Counter(Hypergraph.from_edges(4, e) for e, _ in enumerate_choice_tree(a, b))
    for h, c in per_h.items():
        assert math.isclose(math.log(c), log_sequence_class_size(h))


def test_trace_probability_matches_evaluator_and_replay():
    a, b = (3, 2, 2, 1, 1, 1), (3, 3, 2, 2)
    for seed in range(100):
        t = generate(a, b, seed)
        assert t.log_prob <= 0
        assert math.isclose(t.log_prob, edge_sequence_probability(t), abs_tol=1e-12)
        assert replay(a, b, t.choices) == t.edges
        assert generate(a, b, seed, record=False).edges == t.edges


def test_impossible_sequence_has_zero_probability():
    a, b = (2, 2, 1, 1), (3, 2, 1)
    assert edge_sequence_log_prob(a, b, [(0, 1, 2), (0, 1), (2,)]) == -math.inf
    assert edge_sequence_log_prob(a, b, [(0, 1), (0, 1, 2), (3,)]) == -math.inf


def test_incremental_conjugate_matches_fresh():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b = random_realisable_pair(rng, 8, 8, 6)
        t = generate(a, b, rng)
        bbar = conjugate(b, len(a))
        for j, b1 in enumerate(b):
            bbar = reduce_conjugate_head(bbar, b1)
            assert bbar == conjugate(b[j + 1:], len(a))


def test_support_covered_small():
    a, b = (2, 2, 1, 1), (3, 2, 1)
    seen = {t.hypergraph for t in trace_stream(a, b, 5000, 0)}
    assert seen == {h for h, _ in enumerate_hypergraphs(a, b)}


def test_sample_traces_reproducible_and_worker_independent():
    a, b = (2, 2, 1, 1, 1), (3, 2, 2)
    one = sample_traces(a, b, 30, seed=11, workers=1)
    many = sample_traces(a, b, 30, seed=11, workers=4)
    assert [t.edges for t in one] == [t.edges for t in many]
    assert [t.edges for t in one] != [t.edges for t in sample_traces(a, b, 30, seed=12)]


def test_worker_count_cap(monkeypatch):
    monkeypatch.setenv("HYPERGEN_THREADS", "2")
    assert worker_count(8) == 2
    assert worker_count() == 2
    monkeypatch.delenv("HYPERGEN_THREADS")
    assert worker_count() == 1


@pytest.mark.parametrize("edges, expected", [
    ([[0, 1], [2, 3], [1, 2]], math.log(6)),
    ([[0, 1], [0, 1]], 0.0),
    ([[0, 1], [0, 1], [2]], math.log(3)),
])
def test_hypergraph_multiplicity_examples(edges, expected):
    assert math.isclose(hypergraph_multiplicity(Hypergraph.from_edges(4, edges)), expected, abs_tol=1e-12)


def test_class_size_counts_within_dimension_orderings():
    h = Hypergraph.from_edges(4, [[0, 1], [0, 1], [2], [3]])
    assert math.isclose(log_sequence_class_size(h), math.log(2))
    assert math.isclose(hypergraph_multiplicity(h), math.log(12))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_generated_hypergraph_fidelity(seed):
    rng = np.random.default_rng(seed)
    a, b = random_realisable_pair(rng, 12, 12, 6)
    t = generate(a, b, rng)
    h = t.hypergraph
    assert degree_sequence(h).values == a
    assert dimension_sequence(h) == b
    assert t.log_prob <= 0
    assert math.isclose(t.log_prob, edge_sequence_probability(t), abs_tol=1e-9)


def test_choice_tree_support_equals_oracle_on_all_small_pairs():
    # every realisable pair with n <= 5, m <= 4, entries <= 3
    def seqs(max_len):
        for length in range(1, max_len + 1):
            yield from itertools.combinations_with_replacement(range(3, -1, -1), length)

    checked = 0
    for a in seqs(5):
        for b in seqs(4):
            if not is_realisable(a, b):
                continue
            leaves = list(enumerate_choice_tree(a, b))
            assert math.isclose(math.fsum(math.exp(lp) for _, lp in leaves), 1.0, abs_tol=1e-9)
            tree = {Hypergraph.from_edges(len(a), e) for e, _ in leaves}
            assert tree == {h for h, _ in enumerate_hypergraphs(a, b)}, (a, b)
            checked += 1
    assert checked > 500
