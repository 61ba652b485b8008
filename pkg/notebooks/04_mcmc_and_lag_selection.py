"""
Edge-shuffle MCMC and choosing a thinning lag
=============================================

The chain starts from the constructed realisation and repeatedly re-deals
the vertices of two random edges. A pilot run gives the autocorrelation of
the clustering coefficient; the lag is where it first drops below 0.001.
"""

import numpy as np

from hypergen.construct import construct_initial
from hypergen.estimate import avg_clustering_coefficient, uniform_estimate
from hypergen.io import pseudofractal_sequences
from hypergen.mcmc import autocorrelation, chain_series, mcmc_ess, run_chain, select_lag

a, b = pseudofractal_sequences(2)
h0 = construct_initial(a, b)

pilot = chain_series(h0, 10_000, avg_clustering_coefficient, seed=0)
rho = autocorrelation(pilot, 40)
print(np.round(rho[:10], 3))
lag = select_lag(pilot)
print("lag", lag)

chain = run_chain(h0, 300, lag, seed=1)
values = [avg_clustering_coefficient(h) for h in chain]
rep = uniform_estimate(values, mcmc_ess(values), n_bootstrap=200)
print(f"cc {rep.estimate:.4f} +- {rep.std_error:.4f}, ESS {rep.ess:.0f} of {rep.n_samples}")
