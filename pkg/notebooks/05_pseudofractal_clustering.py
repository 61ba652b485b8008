"""
Clustering of random graphs with pseudo-fractal degrees
=======================================================

G_t has 3**(t-s+1) vertices of degree 2**s and three hubs of degree
2**(t+1). Random multigraphs with the same degrees lose most of the
triangles of G_t itself. Both samplers estimate the projected average
clustering coefficient; the importance weights degrade as t grows, which
the effective sample size makes visible.
"""

from hypergen.construct import construct_initial
from hypergen.estimate import WeightedSample, avg_clustering_coefficient, snis_estimate, uniform_estimate
from hypergen.gen import sample_traces
from hypergen.io import pseudofractal_sequences
from hypergen.mcmc import chain_series, mcmc_ess, run_chain, select_lag

for t in (1, 2):
    a, b = pseudofractal_sequences(t)
    samples = [WeightedSample.from_trace(tr) for tr in sample_traces(a, b, 500, seed=t)]
    snis = snis_estimate(samples, n_bootstrap=200)

    h0 = construct_initial(a, b)
    lag = select_lag(chain_series(h0, 5000, avg_clustering_coefficient, seed=t))
    values = [avg_clustering_coefficient(h) for h in run_chain(h0, 500, lag, seed=t)]
    mc = uniform_estimate(values, mcmc_ess(values), n_bootstrap=200)

    print(f"G_{t}: {len(a)} vertices, {len(b)} edges")
    print(f"  SNIS {snis.estimate:.4f} +- {snis.std_error:.4f} (ESS {snis.ess:.1f})")
    print(f"  MCMC {mc.estimate:.4f} +- {mc.std_error:.4f} (lag {lag})")
