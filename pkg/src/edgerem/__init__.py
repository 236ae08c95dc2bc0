"""Edge-deletion distance to H-freeness: exact solvers, the star-forest
algorithm, degree-capped subgraphs and small-graph verification tools."""

from .factor import max_degree_constrained_subgraph
from .formats import parse_graph, serialize_graph, to_graph6
from .graph import Graph
from .matching import max_matching
from .oracle import ex_exact, rem_exact
from .starforest import ex_star_forest

__all__ = [
    "Graph",
    "ex_exact",
    "ex_star_forest",
    "max_degree_constrained_subgraph",
    "max_matching",
    "parse_graph",
    "rem_exact",
    "serialize_graph",
    "to_graph6",
]
