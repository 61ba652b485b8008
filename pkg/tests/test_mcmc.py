from __future__ import annotations

import math
import warnings
from collections import Counter

import numpy as np
import pytest

from hypergen.construct import construct_initial
from hypergen.core import Hypergraph, degree_sequence, dimension_sequence
from hypergen.mcmc import (
    ChainState,
    autocorrelation,
    chain_series,
    mcmc_ess,
    pairwise_shuffle_step,
    run_chain,
    select_lag,
)
from hypergen.oracle import enumerate_hypergraphs

H = Hypergraph.from_edges


def ar1(phi, n, seed):
    rng = np.random.default_rng(seed)
    eps = rng.standard_normal(n)
    x = np.empty(n)
    x[0] = eps[0] / math.sqrt(1 - phi**2)
    for t in range(1, n):
        x[t] = phi * x[t - 1] + eps[t]
    return x


def test_two_pairs_reach_all_three_pairings():
    state = ChainState(H(4, [[0, 1], [2, 3]]), seed=0)
    seen = set()
    for _ in range(300):
        seen.add(pairwise_shuffle_step(state).current)
    assert seen == {H(4, [[0, 1], [2, 3]]), H(4, [[0, 2], [1, 3]]), H(4, [[0, 3], [1, 2]])}


def test_singleton_swap_keeps_hypergraph():
    state = ChainState(H(2, [[0], [1]]), seed=0)
    for _ in range(20):
        assert pairwise_shuffle_step(state).current == H(2, [[0], [1]])


def test_single_edge_is_rejected():
    with pytest.raises(ValueError):
        ChainState(H(3, [[0, 1, 2]]), seed=0).step()


def test_identical_edges_count_no_ops():
    # {0,1},{0,1}: every re-deal repeats a vertex unless it restores the pair
    state = ChainState(H(2, [[0, 1], [0, 1]]), seed=0)
    for _ in range(50):
        state.step()
    assert state.current == H(2, [[0, 1], [0, 1]])
    assert state.steps_taken == 50


def test_run_chain_shapes_and_invariance():
    h0 = construct_initial((3, 2, 2, 1, 1, 1), (3, 3, 2, 2))
    assert len(run_chain(h0, 3, lag=1, burn_in=0, seed=1)) == 3
    for h in run_chain(h0, 200, lag=2, seed=2):
        assert degree_sequence(h).values == (3, 2, 2, 1, 1, 1)
        assert dimension_sequence(h) == (3, 3, 2, 2)


def test_run_chain_reproducible():
    h0 = construct_initial((3, 2, 2, 1, 1, 1), (3, 3, 2, 2))
    assert run_chain(h0, 50, 3, seed=9) == run_chain(h0, 50, 3, seed=9)


def test_lag_must_be_positive():
    with pytest.raises(ValueError):
        run_chain(H(2, [[0], [1]]), 1, lag=0)


def test_chain_visits_every_realisation():
    a, b = (2, 2, 1, 1), (3, 2, 1)
    seen = set(run_chain(construct_initial(a, b), 3000, lag=1, burn_in=0, seed=4))
    assert seen == {h for h, _ in enumerate_hypergraphs(a, b)}


def test_stationary_frequencies_are_uniform_on_small_instance():
    a, b = (2, 2, 1, 1), (3, 2, 1)
    pop = [h for h, _ in enumerate_hypergraphs(a, b)]
    n = 20_000
    counts = Counter(run_chain(construct_initial(a, b), n, lag=10, seed=5))
    p = 1 / len(pop)
    se = math.sqrt(p * (1 - p) / n)
    for h in pop:
        assert abs(counts[h] / n - p) < 5 * se, (h, counts[h])


def test_chain_series_length():
    h0 = construct_initial((2, 2, 1, 1), (3, 2, 1))
    assert chain_series(h0, 25, lambda h: float(h.edges[0][0]), seed=0).shape == (25,)


def test_autocorrelation_basics():
    x = np.random.default_rng(0).standard_normal(10_000)
    rho = autocorrelation(x, 5)
    assert rho[0] == 1.0
    assert np.all(np.abs(rho[1:]) < 3 / math.sqrt(x.size))
    alt = np.tile([1.0, -1.0], 500)
    assert autocorrelation(alt, 1)[1] == pytest.approx(-1.0, abs=2e-3)


def test_autocorrelation_matches_direct_formula():
    x = np.random.default_rng(1).standard_normal(300)
    y = x - x.mean()
    direct = [np.dot(y[: y.size - l], y[l:]) / np.dot(y, y) for l in range(8)]
    assert np.allclose(autocorrelation(x, 7), direct, atol=1e-12)


@pytest.mark.parametrize("series", [[1.0] * 10, [2.0]])
def test_degenerate_series_raise(series):
    with pytest.raises(ValueError):
        autocorrelation(series, 3)
    with pytest.raises(ValueError):
        mcmc_ess(series)


def test_select_lag_examples():
    x = np.random.default_rng(2).standard_normal(5000)
    assert select_lag(x, threshold=1.1) == 1
    assert select_lag(ar1(0.9, 20_000, 3)) > select_lag(ar1(0.3, 20_000, 3))


def test_select_lag_warns_when_threshold_never_met():
    x = np.arange(20, dtype=float)  # trend: positive autocorrelation at small lags
    with pytest.warns(RuntimeWarning):
        lag = select_lag(x, threshold=-1.0, max_lag=5)
    assert lag == 5


def test_mcmc_ess_iid_and_ar1():
    n = 100_000
    iid = np.random.default_rng(4).standard_normal(n)
    assert abs(mcmc_ess(iid) - n) < 0.2 * n
    assert abs(mcmc_ess(ar1(0.5, n, 5)) - n / 3) < 0.2 * n / 3


def test_select_lag_no_warning_on_iid():
    x = np.random.default_rng(6).standard_normal(5000)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert select_lag(x) >= 1
