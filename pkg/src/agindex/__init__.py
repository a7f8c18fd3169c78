"""Degree-based topological indices, with a focus on the arithmetic-geometric index.

Modules: ``graph`` and ``graph_io`` (graphs, families, graph6), ``indices``,
``bounds`` and ``relations`` (inequality checks with equality classes),
``chromatic``, ``edge_effects`` (edge-deletion deltas and their sufficient
conditions), ``enumeration`` and ``cli``.
"""

from .graph import Graph, GraphError, build_graph, family
from .graph_io import parse_graph6, write_graph6
from .indices import IndexVector, index_vector

__all__ = [
    "Graph",
    "GraphError",
    "IndexVector",
    "build_graph",
    "family",
    "index_vector",
    "parse_graph6",
    "write_graph6",
]
