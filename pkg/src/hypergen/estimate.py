"""Hypergraph properties and self-normalised importance sampling estimates."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from .core import Hypergraph, project_to_simple_graph
from .gen import GenTrace, hypergraph_multiplicity

__all__ = [
    "WEIGHT_MODES",
    "WeightedSample",
    "EstimateReport",
    "avg_clustering_coefficient",
    "local_clustering",
    "log_weights",
    "snis_weights",
    "snis_ess",
    "snis_estimate",
    "uniform_estimate",
    "importance_estimate",
    "bootstrap_std",
]

WEIGHT_MODES = ("paper", "exact")


def local_clustering(h: Hypergraph) -> np.ndarray:
    """Local clustering coefficient of every vertex of the projected graph.

    Vertices with fewer than two neighbours get 0.
    """
    adj = project_to_simple_graph(h)
    out = np.zeros(h.n_vertices)
    for v, nbrs in enumerate(adj):
        d = len(nbrs)
        if d < 2:
            continue
        links = sum(len(adj[u] & nbrs) for u in nbrs) // 2
        out[v] = 2.0 * links / (d * (d - 1))
    return out


def avg_clustering_coefficient(h: Hypergraph) -> float:
    """Mean local clustering over all vertices of the clique expansion."""
    if h.n_vertices < 1:
        raise ValueError("clustering coefficient needs at least one vertex")
    return float(local_clustering(h).mean())


@dataclass(frozen=True)
class WeightedSample:
    """A generated hypergraph with everything needed to weight it.

    ``log_prob`` is the log-probability of the edge sequence that produced
    it; ``log_multiplicity`` is the log number of edge orderings giving the
    same hypergraph.
    """

    hypergraph: Hypergraph
    log_prob: float
    log_multiplicity: float
    property_value: float

    def __post_init__(self):
        if self.log_prob > 1e-9:
            raise ValueError(f"log_prob must be <= 0, got {self.log_prob}")
        if self.log_multiplicity < -1e-9:
            raise ValueError(f"log_multiplicity must be >= 0, got {self.log_multiplicity}")

    @classmethod
    def from_trace(cls, trace: GenTrace,
                   prop: Callable[[Hypergraph], float] = avg_clustering_coefficient) -> WeightedSample:
        h = trace.hypergraph
        return cls(h, trace.log_prob, hypergraph_multiplicity(h), float(prop(h)))


@dataclass(frozen=True)
class EstimateReport:
    estimate: float
    normalised_weights: np.ndarray
    ess: float
    n_samples: int
    weight_mode: str
    std_error: float | None = None

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "ess": self.ess,
            "n_samples": self.n_samples,
            "weight_mode": self.weight_mode,
            "std_error": self.std_error,
        }


def log_weights(samples: Sequence[WeightedSample], mode: str = "exact") -> np.ndarray:
    """Unnormalised log importance weights.

    ``paper`` weights each sample by ``1 / P(E)``. ``exact`` also divides by
    the number of edge orderings of the hypergraph, which is what makes the
    target uniform over hypergraphs when parallel edges occur.
    """
    if mode not in WEIGHT_MODES:
        raise ValueError(f"weight mode must be one of {WEIGHT_MODES}, got {mode!r}")
    lp = np.array([s.log_prob for s in samples], dtype=float)
    if mode == "paper":
        return -lp
    lm = np.array([s.log_multiplicity for s in samples], dtype=float)
    return -lp - lm


def _normalise(log_w: np.ndarray) -> np.ndarray:
    w = np.exp(log_w - log_w.max())
    return w / w.sum()


def snis_weights(samples: Sequence[WeightedSample], mode: str = "exact") -> np.ndarray:
    """Self-normalised importance weights (sum to one)."""
    if not samples:
        raise ValueError("need at least one sample")
    return _normalise(log_weights(samples, mode))


def snis_ess(weights: Sequence[float]) -> float:
    """Kish effective sample size ``1 / sum(w_i ** 2)`` of normalised weights."""
    w = np.asarray(weights, dtype=float)
    if w.size and np.all(w == w[0]):
        # equal weights: exactly N, without the rounding of 1/sum(w^2)
        return float(w.size)
    return float(1.0 / np.dot(w, w))


def bootstrap_std(values: Sequence[float], log_w: Sequence[float] | None = None,
                  n_bootstrap: int = 1000, seed=0) -> float:
    """Bootstrap standard deviation of a (weighted) mean.

    With ``log_w`` the statistic is the self-normalised weighted mean, with the
    weights renormalised inside every resample.
    """
    f = np.asarray(values, dtype=float)
    n = f.size
    if n == 0:
        raise ValueError("need at least one value")
    rng = np.random.default_rng(seed)
    if log_w is not None:
        lw = np.asarray(log_w, dtype=float)
        w_all = np.exp(lw - lw.max())
    stats = np.empty(n_bootstrap)
    for r in range(n_bootstrap):
        idx = rng.integers(0, n, size=n)
        if log_w is None:
            stats[r] = f[idx].mean()
        else:
            w = w_all[idx]
            stats[r] = np.dot(w, f[idx]) / w.sum()
    return float(stats.std(ddof=1)) if n_bootstrap > 1 else 0.0


def snis_estimate(samples: Sequence[WeightedSample], values: Sequence[float] | None = None,
                  mode: str = "exact", n_bootstrap: int = 1000, seed=0) -> EstimateReport:
    """Self-normalised importance sampling estimate of a property mean.

    ``values`` defaults to each sample's ``property_value``. Set
    ``n_bootstrap=0`` to skip the bootstrap standard error.
    """
    if not samples:
        raise ValueError("need at least one sample")
    f = np.array([s.property_value for s in samples] if values is None else values, dtype=float)
    if f.size != len(samples):
        raise ValueError("values and samples differ in length")
    lw = log_weights(samples, mode)
    w = _normalise(lw)
    se = bootstrap_std(f, lw, n_bootstrap, seed) if n_bootstrap else None
    return EstimateReport(float(np.dot(w, f)), w, snis_ess(w), len(samples), mode, se)


def uniform_estimate(values: Sequence[float], ess: float | None = None,
                     n_bootstrap: int = 1000, seed=0) -> EstimateReport:
    """Plain mean, e.g. of MCMC samples.

    ``ess`` overrides the default ``N`` (pass :func:`hypergen.mcmc.mcmc_ess`).
    """
    f = np.asarray(values, dtype=float)
    if f.size == 0:
        raise ValueError("need at least one value")
    w = np.full(f.size, 1.0 / f.size)
    se = bootstrap_std(f, None, n_bootstrap, seed) if n_bootstrap else None
    return EstimateReport(float(f.mean()), w, float(f.size if ess is None else ess), f.size, "uniform", se)


def importance_estimate(values: Sequence[float], log_target: Sequence[float],
                        log_prob: Sequence[float]) -> float:
    """Unnormalised importance estimate ``mean(target / proposal * f)``.

    Needs the normalised target probability of each sampled edge sequence,
    so it is only usable when the population can be counted.
    """
    f = np.asarray(values, dtype=float)
    ratio = np.exp(np.asarray(log_target, dtype=float) - np.asarray(log_prob, dtype=float))
    return float(np.mean(ratio * f))
