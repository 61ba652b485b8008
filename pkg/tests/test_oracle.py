from __future__ import annotations

import itertools

import numpy as np
import pytest

from hypergen.core import Hypergraph
from hypergen.errors import CapExceeded
from hypergen.estimate import avg_clustering_coefficient
from hypergen.oracle import enumerate_hypergraphs, enumerate_matrices, exact_population_mean, has_realisation
from hypergen.seq import is_realisable

from conftest import count_matrices_by_columns

H = Hypergraph.from_edges


def test_matrix_examples():
    ms = enumerate_matrices((1, 1), (2,))
    assert len(ms) == 1 and np.array_equal(ms[0], [[1, 1]])
    ms = enumerate_matrices((1, 1), (1, 1))
    assert sorted(m.tolist() for m in ms) == [[[0, 1], [1, 0]], [[1, 0], [0, 1]]]


def test_matrices_have_requested_margins():
    for M in enumerate_matrices((2, 2, 1, 1), (3, 2, 1)):
        assert M.sum(axis=0).tolist() == [2, 2, 1, 1]
        assert M.sum(axis=1).tolist() == [3, 2, 1]


def _pairs(n_max, m_max, e_max):
    for n in range(1, n_max + 1):
        for a in itertools.combinations_with_replacement(range(e_max, -1, -1), n):
            for m in range(1, m_max + 1):
                for b in itertools.combinations_with_replacement(range(e_max, -1, -1), m):
                    yield a, b


def test_counts_match_independent_column_recursion():
    assert len(enumerate_matrices((2, 2, 1, 1), (3, 2, 1))) == count_matrices_by_columns((2, 2, 1, 1), (3, 2, 1)) == 8
    for a, b in _pairs(4, 4, 3):
        assert len(enumerate_matrices(a, b)) == count_matrices_by_columns(a, b), (a, b)


def test_transpose_symmetry_and_realisability():
    for a, b in _pairs(4, 4, 3):
        count = len(enumerate_matrices(a, b))
        assert count == len(enumerate_matrices(b, a))
        assert is_realisable(a, b) == (count > 0) == has_realisation(a, b)


def test_orderings_sum_to_matrix_count():
    for a, b in [((2, 2, 1, 1), (3, 2, 1)), ((2, 2, 1, 1), (2, 2, 1, 1)), ((3, 2, 2, 1), (3, 2, 2, 1))]:
        hs = enumerate_hypergraphs(a, b)
        assert sum(c for _, c in hs) == len(enumerate_matrices(a, b))
        assert len({h for h, _ in hs}) == len(hs)


def test_hypergraph_examples():
    assert enumerate_hypergraphs((2, 2), (2, 2)) == [(H(2, [[0, 1], [0, 1]]), 1)]
    hs = {h for h, _ in enumerate_hypergraphs((1, 1, 1), (2, 1))}
    assert hs == {H(3, [[0, 1], [2]]), H(3, [[0, 2], [1]]), H(3, [[1, 2], [0]])}


def test_exact_means():
    assert exact_population_mean((1, 1, 1), (2, 1), avg_clustering_coefficient) == 0.0
    assert exact_population_mean((2, 2, 2), (3, 3), avg_clustering_coefficient) == 1.0
    assert exact_population_mean((2, 2, 1, 1), (3, 2, 1), avg_clustering_coefficient) == pytest.approx(0.625)
    with pytest.raises(ValueError):
        exact_population_mean((3, 1), (2, 2), avg_clustering_coefficient)


def test_work_cap():
    with pytest.raises(CapExceeded):
        enumerate_matrices((1,) * 6, (1,) * 6)
    assert len(enumerate_matrices((1,) * 3, (1,) * 3, cap=9)) == 6
