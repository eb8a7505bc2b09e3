"""
Mutually maximally distant vertices
===================================

Two vertices are mutually maximally distant (MMD) when neither has a
neighbour farther from the other.  The strong resolving graph joins MMD pairs;
a minimum vertex cover of it is a strong metric basis.
"""

from strongdim.families import cycle, path, wheel
from strongdim.products import cartesian_sum
from strongdim.resolving import boundary, mmd_pairs, star_closure, strong_resolving_graph
from strongdim.graph import remove_isolated

# on a path only the two ends are MMD
print(sorted(tuple(sorted(p)) for p in mmd_pairs(path(5))))

# on an even cycle the antipodal pairs are
print(sorted(tuple(sorted(p)) for p in mmd_pairs(cycle(6))))

# the boundary is the set of vertices that occur in some MMD pair
print("boundary of W_1,5:", boundary(wheel(5)))

# the strong resolving graph keeps its own labels; vertex_map leads back
sr = strong_resolving_graph(path(5))
print(sr.graph.edges(), "->", [sr.to_parent(e) for e in sr.graph.edges()])

# for a Cartesian sum of diameter two it is the star closure minus isolated vertices
s = cartesian_sum(path(4), path(3))
star, keep = remove_isolated(star_closure(s))
print("SR graph equals star closure:", strong_resolving_graph(s).graph == star)
