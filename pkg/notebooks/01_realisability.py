"""
Which degree/dimension pairs have a hypergraph?
===============================================

A pair (a, b) is realisable when some 0/1 incidence matrix has column sums a
(vertex degrees) and row sums b (edge sizes). The test compares prefix sums
of a against the conjugate of b.
"""

from hypergen.oracle import enumerate_matrices
from hypergen.seq import conjugate, dominance_violation, is_realisable, realisability_violation

# conjugate: component i counts the entries of b that are at least i
print(conjugate((4, 2, 2, 1), 6))

a, b = (2, 2, 1, 1), (3, 2, 1)
bbar = conjugate(b, len(a))
print("prefix sums of a   ", [sum(a[:k]) for k in range(1, 5)])
print("prefix sums of bbar", [sum(bbar[:k]) for k in range(1, 5)])
print("realisable:", is_realisable(a, b))

# a failure reports the first prefix where dominance breaks
print(realisability_violation((3, 1), (2, 2)))
print(dominance_violation((3, 1), (2, 2)))

# brute force agrees: there are 8 incidence matrices for the pair above
print(len(enumerate_matrices(a, b)), "matrices;", len(enumerate_matrices((3, 1), (2, 2))), "for (3,1)/(2,2)")
