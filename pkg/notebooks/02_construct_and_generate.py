"""
Building and sampling realisations
==================================

``construct_initial`` returns one deterministic realisation. ``generate``
draws a random one and reports the exact log-probability of the edge
sequence it produced.
"""

import math
from collections import Counter

from hypergen.construct import construct_initial
from hypergen.gen import edge_sequence_probability, enumerate_choice_tree, generate, replay, trace_stream

a, b = (2, 2, 1, 1), (3, 2, 1)
print(construct_initial(a, b))

trace = generate(a, b, rng=42)
print(trace.edges, "P =", math.exp(trace.log_prob))

# the probability can be recomputed from the edges alone
print(math.isclose(trace.log_prob, edge_sequence_probability(trace)))

# and the recorded choices replay to the same edges
print(replay(a, b, trace.choices) == trace.edges)

# the full choice tree: every reachable edge sequence and its probability
tree = dict(enumerate_choice_tree(a, b))
print(len(tree), "edge sequences, total probability", math.fsum(map(math.exp, tree.values())))

# empirical frequencies follow the tree
n = 50_000
counts = Counter(t.edges for t in trace_stream(a, b, n, rng=0))
for edges, lp in sorted(tree.items(), key=lambda kv: -kv[1]):
    print(f"{math.exp(lp):.4f}  {counts[edges] / n:.4f}  {edges}")
