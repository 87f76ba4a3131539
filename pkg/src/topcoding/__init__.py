"""Topological coding toolkit: labelings, Topcode-matrices, graphic groups, degree sequences."""

from .graph import Graph, Bipartition, GraphError, parse_graph, bipartition
from .labelings import Labeling, VerifierSpec, VerifyReport, verify
from .degseq import DegreeSequence, is_graphical

__all__ = [
    "Graph", "Bipartition", "GraphError", "parse_graph", "bipartition",
    "Labeling", "VerifierSpec", "VerifyReport", "verify",
    "DegreeSequence", "is_graphical",
]
__version__ = "0.1.0"
