"""
Families and enumeration
========================

Named families use fixed labellings (hub = vertex 0, grids row-major).
Random members are reproducible from their seed.
"""

from collections import Counter

from strongdim.families import FamilySpec, fan, generate, nonisomorphic_graphs, random_tree
from strongdim.io import format_graph6
from strongdim.solvers import clique_number, twins_free_clique_number

w = generate(FamilySpec("wheel", 4))
print("W_1,4:", w.n, "vertices,", w.m, "edges")

# same seed, same tree
print(random_tree(8, seed=11).edges() == random_tree(8, seed=11).edges())

# in F_1,3 the hub and the middle path vertex are true twins, so varpi drops
for n in (3, 4, 5):
    g = fan(n)
    print(f"F_1,{n}: omega {clique_number(g).value}, varpi {twins_free_clique_number(g).value}")

# isomorphism classes of connected graphs on six vertices, by size
reps = nonisomorphic_graphs(6, connected=True)
print(len(reps), "classes;", sorted(Counter(g.m for g in reps).items()))
print("first few in graph6:", [format_graph6(g) for g in reps[:4]])
