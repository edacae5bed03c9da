"""Recognition and certification of strong cocomparability graphs.

A reflexive graph is strong cocomparability when its adjacency matrix has a
simultaneous row/column ordering free of the 2x2 submatrix with rows 01, 10.
Two recognizers are provided (invertible pairs of the forcing relation, and
comparability of the avoidance graph), together with certificate producers
and verifiers for both answers and brute-force oracles for small inputs.
"""

from .avoidance import avoids, build_avoidance_graph, recognize_via_avoidance
from .certificates import (
    Asteroid,
    WeakEdgeAsteroid,
    complement_asteroid_to_wea,
    extract_weak_edge_asteroid,
    invertible_pair_from_wea,
    search_strong_ordering,
    verify_asteroid,
    verify_weak_edge_asteroid,
    wea_to_complement_asteroid,
)
from .comparability import (
    Orientation,
    implication_classes,
    recognize_cocomparability,
    recognize_comparability,
    verify_transitive,
)
from .constructions import (
    bipartite_double,
    close_both_sides,
    generate,
    recognize_cocomparability_bigraph,
)
from .forcing import (
    Decision,
    InvertiblePair,
    PairGraph,
    build_pair_graph,
    find_invertible_pair,
    forces,
    recognize_strong_cocomparability,
)
from .graph_core import (
    Bigraph,
    Graph,
    SimpleGraph,
    complement_simple,
    decode_graph,
    encode_graph,
    is_bigraph_slash_free,
    is_slash_free_ordering,
)

__all__ = [name for name in dir() if not name.startswith("_")]
