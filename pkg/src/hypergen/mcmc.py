"""Edge-shuffle Markov chain over hypergraphs with fixed degree and dimension sequences.

The chain starts from any realisation (typically
:func:`hypergen.construct.construct_initial`) and repeatedly picks two edges
and re-deals the vertices they hold between them, keeping both sizes and
never placing a vertex twice in the same edge. Samples are thinned at a lag
chosen from the autocorrelation of a scalar statistic along a pilot chain.
"""

from __future__ import annotations

import warnings
from collections.abc import Callable, Sequence

import numpy as np

from .core import Hypergraph, degrees, dimension_sequence

__all__ = [
    "ChainState",
    "pairwise_shuffle_step",
    "run_chain",
    "chain_series",
    "autocorrelation",
    "select_lag",
    "mcmc_ess",
    "MAX_RETRIES",
]

MAX_RETRIES = 100


class ChainState:
    """Mutable state of one chain.

    Edges live in fixed slots, so slot ``i`` keeps its size for the whole
    run. ``n_noop`` counts steps where no loopless re-deal was found within
    :data:`MAX_RETRIES` attempts.
    """

    def __init__(self, initial: Hypergraph, seed=None):
        self.n_vertices = initial.n_vertices
        self.slots = [list(e) for e in initial.edges]
        self.rng = np.random.default_rng(seed)
        self.steps_taken = 0
        self.n_noop = 0
        self._degrees = degrees(initial)
        self._dimensions = dimension_sequence(initial)

    @property
    def current(self) -> Hypergraph:
        return Hypergraph.from_edges(self.n_vertices, self.slots)

    def check_invariants(self) -> bool:
        h = self.current
        return degrees(h) == self._degrees and dimension_sequence(h) == self._dimensions

    def step(self) -> None:
        m = len(self.slots)
        if m < 2:
            raise ValueError("edge shuffling needs at least two edges")
        u = self.rng.random(2)
        i = int(u[0] * m)
        j = int(u[1] * (m - 1))
        if j >= i:
            j += 1
        ei, ej = self.slots[i], self.slots[j]
        size_i = len(ei)
        pool = ei + ej
        self.steps_taken += 1
        if not set(ei) & set(ej):
            # disjoint edges: every re-deal is loopless, no rejection needed
            self.rng.shuffle(pool)
            self.slots[i], self.slots[j] = pool[:size_i], pool[size_i:]
            return
        for _ in range(MAX_RETRIES):
            self.rng.shuffle(pool)
            left, right = pool[:size_i], pool[size_i:]
            if len(set(left)) == size_i and len(set(right)) == len(right):
                self.slots[i], self.slots[j] = left, right
                return
        self.n_noop += 1

    def sample(self, n_samples: int, lag: int, burn_in: int = 0) -> list[Hypergraph]:
        """Run ``burn_in`` steps, then record the state every ``lag`` steps."""
        if lag < 1:
            raise ValueError("lag must be at least 1")
        for _ in range(burn_in):
            self.step()
        samples = []
        for _ in range(n_samples):
            for _ in range(lag):
                self.step()
            samples.append(self.current)
        return samples


def pairwise_shuffle_step(state: ChainState) -> ChainState:
    """Advance ``state`` by one edge-shuffle move (in place) and return it."""
    state.step()
    assert state.check_invariants(), "edge shuffle changed the sequences"
    return state


def run_chain(initial: Hypergraph, n_samples: int, lag: int, burn_in: int | None = None,
              seed=None) -> list[Hypergraph]:
    """Thinned samples from an edge-shuffle chain started at ``initial``.

    ``burn_in`` defaults to ten lags.
    """
    if burn_in is None:
        burn_in = 10 * lag
    return ChainState(initial, seed).sample(n_samples, lag, burn_in)


def chain_series(initial: Hypergraph, n_steps: int, statistic: Callable[[Hypergraph], float],
                 seed=None) -> np.ndarray:
    """``statistic`` evaluated after each of ``n_steps`` moves (a pilot run)."""
    state = ChainState(initial, seed)
    out = np.empty(n_steps)
    for t in range(n_steps):
        state.step()
        out[t] = statistic(state.current)
    return out


def autocorrelation(series: Sequence[float], max_lag: int) -> np.ndarray:
    """Sample autocorrelation ``rho(0..max_lag)``, normalised by the lag-0 autocovariance.

    Raises:
        ValueError: for a series shorter than two or with zero variance.
    """
    x = np.asarray(series, dtype=float)
    n = x.size
    if n < 2:
        raise ValueError("autocorrelation needs at least two observations")
    if np.ptp(x) == 0:
        raise ValueError("series has zero variance")
    x = x - x.mean()
    c0 = np.dot(x, x) / n
    max_lag = min(max_lag, n - 1)
    size = 1 << int(np.ceil(np.log2(2 * n)))
    f = np.fft.rfft(x, size)
    acov = np.fft.irfft(f * np.conjugate(f), size)[: max_lag + 1] / n
    rho = acov / c0
    rho[0] = 1.0
    return rho


def _default_max_lag(n: int) -> int:
    return max(1, n // 2)


def select_lag(series: Sequence[float], threshold: float = 0.001, max_lag: int | None = None) -> int:
    """Smallest lag ``l >= 1`` whose autocorrelation is below ``threshold``.

    If no lag up to ``max_lag`` qualifies, warns and returns ``max_lag``.
    """
    n = len(series)
    if max_lag is None:
        max_lag = _default_max_lag(n)
    rho = autocorrelation(series, max_lag)
    below = np.nonzero(rho[1:] < threshold)[0]
    if below.size:
        return int(below[0]) + 1
    found = len(rho) - 1
    warnings.warn(
        f"autocorrelation stayed above {threshold} up to lag {found}", RuntimeWarning, stacklevel=2
    )
    return max(found, 1)


def mcmc_ess(series: Sequence[float], threshold: float = 0.001, max_lag: int | None = None) -> float:
    """``N / (1 + 2 * sum rho(l))`` summed over the lags before ``rho`` drops below ``threshold``."""
    n = len(series)
    if max_lag is None:
        max_lag = _default_max_lag(n)
    rho = autocorrelation(series, max_lag)
    below = np.nonzero(rho[1:] < threshold)[0]
    last = int(below[0]) if below.size else len(rho) - 1
    return n / (1.0 + 2.0 * float(rho[1: last + 1].sum()))
