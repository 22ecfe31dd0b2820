"""Strong orientations of bridgeless mixed graphs with certified diameter bounds."""

from .engine import (
    BoundCertificate,
    CaseId,
    Orientation,
    bipartite_certificate,
    build_du,
    extend_to_strong,
    orient_best,
    orient_with_bound,
)
from .errors import MixorientError
from .graph import EdgeRecord, MixedGraph, from_lists, parse_graph, read_graph
from .oracle import OracleResult, oriented_diameter_exact, verify_lower_bound
from .reach import bridges, diameter, is_bridgeless, is_connected, mixed_distance
from .stage1 import partition_neighbors
from .hu import build_hu

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "CaseId",
    "EdgeRecord",
    "MixedGraph",
    "MixorientError",
    "Orientation",
    "OracleResult",
    "bipartite_certificate",
    "bridges",
    "build_du",
    "build_hu",
    "diameter",
    "extend_to_strong",
    "from_lists",
    "is_bridgeless",
    "is_connected",
    "mixed_distance",
    "orient_best",
    "orient_with_bound",
    "oriented_diameter_exact",
    "parse_graph",
    "partition_neighbors",
    "read_graph",
    "verify_lower_bound",
]
