"""
Cliques of Cartesian sums
=========================

omega(G (+) H) is at least omega(G) omega(H), but it can be larger.
C_5 (+) C_5 contains a clique of size five although both factors have
clique number two.  By the complement law this is alpha(C_5 [x] C_5) = 5,
the classic Shannon capacity example.
"""

from strongdim.families import cycle, path
from strongdim.graph import complement
from strongdim.products import cartesian_sum, flatten, strong_product
from strongdim.solvers import clique_number, independence_number, strong_metric_dimension

s = cartesian_sum(cycle(5), cycle(5))
w = clique_number(s)
print("omega(C_5 (+) C_5) =", w.value)

# an explicit clique: (i, 2i mod 5)
k = [flatten(i, 2 * i % 5, 5) for i in range(5)]
print("explicit clique:", s.is_clique(k))

print("alpha(C_5 [x] C_5) =", independence_number(strong_product(complement(cycle(5)), complement(cycle(5)))).value)

# the product formula nn' - omega(G)omega(H) would give 21 here
print("dim_s(C_5 (+) C_5) =", strong_metric_dimension(s).value)

# for bipartite-like factors there is no gap
print("omega(P_4 (+) C_6) =", clique_number(cartesian_sum(path(4), cycle(6))).value)
