"""Partial cube recognition and hypercube labeling in quadratic time."""

from .errors import GraphError, NotPartialCube, SelfLoopError, VertexOutOfRange
from .graph import Graph
from .labeler import EdgeClassPartition, SemicubeLabeling, label_all
from .recognize import Recognition, is_partial_cube, recognize
from .verifier import verify

__all__ = [
    "EdgeClassPartition",
    "Graph",
    "GraphError",
    "NotPartialCube",
    "Recognition",
    "SelfLoopError",
    "SemicubeLabeling",
    "VertexOutOfRange",
    "is_partial_cube",
    "label_all",
    "recognize",
    "verify",
]
