"""Construct, randomly generate and sample-estimate hypergraphs with given degree and dimension sequences."""

__version__ = "0.1.0"

from .construct import construct_initial
from .core import (
    Hypergraph,
    degree_sequence,
    dimension_sequence,
    edge_multiset_multiplicities,
    incidence_matrix,
    project_to_simple_graph,
)
from .errors import (
    CapExceeded,
    EmptyInput,
    HypergenError,
    InternalInvariantError,
    ParseError,
    RealisabilityError,
)
from .estimate import (
    EstimateReport,
    WeightedSample,
    avg_clustering_coefficient,
    snis_ess,
    snis_estimate,
    snis_weights,
)
from .gen import GenTrace, generate, hypergraph_multiplicity, sample_traces
from .mcmc import autocorrelation, mcmc_ess, run_chain, select_lag
from .seq import conjugate, dominates, is_realisable

__all__ = [
    "CapExceeded",
    "EmptyInput",
    "EstimateReport",
    "GenTrace",
    "Hypergraph",
    "HypergenError",
    "InternalInvariantError",
    "ParseError",
    "RealisabilityError",
    "WeightedSample",
    "autocorrelation",
    "avg_clustering_coefficient",
    "conjugate",
    "construct_initial",
    "degree_sequence",
    "dimension_sequence",
    "dominates",
    "edge_multiset_multiplicities",
    "generate",
    "hypergraph_multiplicity",
    "incidence_matrix",
    "is_realisable",
    "mcmc_ess",
    "project_to_simple_graph",
    "run_chain",
    "sample_traces",
    "select_lag",
    "snis_ess",
    "snis_estimate",
    "snis_weights",
]
