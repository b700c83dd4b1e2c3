"""Multiple-interval graph constructions, exact solvers, and the
iff-verification harness."""

from .graphs import (Graph, ColoredGraph, RBInstance, canonicalize_colored,
                     complement, connected_components, graph_power,
                     induced_subgraph)
from .intervals import (Interval, IntervalFamily, MultiInterval, Rational,
                        build_intersection_graph, cycle_complement_unit2interval,
                        intersects, layout_matches, staircase, validate_family)

__all__ = [
    "Graph", "ColoredGraph", "RBInstance", "canonicalize_colored",
    "complement", "connected_components", "graph_power", "induced_subgraph",
    "Interval", "IntervalFamily", "MultiInterval", "Rational",
    "build_intersection_graph", "cycle_complement_unit2interval",
    "intersects", "layout_matches", "staircase", "validate_family",
]

__version__ = "0.1.0"
