"""Vertex-minor calculator: prime graphs, isotropic systems and the
non-essential vertex theorems, checked exhaustively on small graphs."""

from vmcalc.equivalence import (
    are_locally_equivalent,
    classify_vertex,
    local_orbit,
    non_essential_vertices,
    non_pivotal_vertices,
)
from vmcalc.graph import Graph, find_split, is_prime, local_complement, pivot
from vmcalc.isotropic import IsotropicSystem, graph_system
from vmcalc.theta import ThetaSpec, build_theta

__all__ = [
    "Graph",
    "IsotropicSystem",
    "ThetaSpec",
    "are_locally_equivalent",
    "build_theta",
    "classify_vertex",
    "find_split",
    "graph_system",
    "is_prime",
    "local_complement",
    "local_orbit",
    "non_essential_vertices",
    "non_pivotal_vertices",
    "pivot",
]
