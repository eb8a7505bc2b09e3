"""
Graph products on small factors
===============================

The Cartesian sum joins (a, b) and (c, d) whenever a~c in G or b~d in H.
Its complement is the strong product of the complements.
"""

import numpy as np

from strongdim.families import complete, cycle, empty, path
from strongdim.graph import complement
from strongdim.products import cartesian_sum, lexicographic_product, strong_product, unflatten

# P_3 (+) P_3 has 9 vertices, labelled row-major: (u, v) -> 3u + v
s = cartesian_sum(path(3), path(3))
print("order", s.n, "size", s.m)
print(s.adjacency_matrix().astype(int))

# which product coordinates does vertex 5 carry?
print("vertex 5 =", unflatten(5, 3))

# complement law, checked on a slightly bigger pair
g, h = path(4), cycle(5)
print("complement law holds:", complement(cartesian_sum(g, h)) == strong_product(complement(g), complement(h)))

# with an empty second factor the sum is the lexicographic product
print("G (+) N_3 == G o N_3:", cartesian_sum(g, empty(3)) == lexicographic_product(g, empty(3)))

# degrees of K_2 (+) C_5, as a numpy array
a = cartesian_sum(complete(2), cycle(5)).adjacency_matrix()
print("degree histogram:", np.bincount(a.sum(axis=1)))
