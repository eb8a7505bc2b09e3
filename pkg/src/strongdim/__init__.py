"""Strong metric dimension of graphs and Cartesian sum graphs."""

from .graph import (
    INF,
    Graph,
    GraphError,
    complement,
    components,
    diameter,
    distance_matrix,
    is_connected,
    remove_isolated,
    true_twins,
)
from .products import (
    cartesian_product,
    cartesian_sum,
    join,
    lexicographic_product,
    strong_product,
)
from .resolving import (
    DerivedGraph,
    boundary,
    is_maximally_distant,
    mmd_pairs,
    star_closure,
    strong_resolving_graph,
    tf_strong_resolving_graph,
)
from .solvers import (
    InvariantBundle,
    clique_number,
    independence_number,
    invariants,
    is_c_graph,
    is_strong_metric_generator,
    strong_metric_dimension,
    strong_metric_dimension_bruteforce,
    twins_free_clique_number,
    vertex_cover_number,
)

__version__ = "0.1.0"
