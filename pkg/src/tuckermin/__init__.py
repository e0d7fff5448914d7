"""Consecutive ones property checks with minimum Tucker submatrix certificates."""

from .asteroidal import AsteroidalTriple, find_min_triple, triple_span
from .bigraph import BipartiteGraph, Side, Vertex, VertexMask, build_graph
from .conditional import (
    DetectorOutcome,
    find_type3_conditional,
    find_type4_conditional,
    find_type5_conditional,
)
from .exact import find_min_type1, find_min_type3, find_type4, find_type5
from .matrix import BinaryMatrix, MatrixParseError, normalize, parse_matrix, serialize_matrix, stats
from .min_tucker import check_c1p, find_min_tucker
from .oracle import oracle_c1p, oracle_is_minimal_pattern, oracle_min_obstruction
from .patterns import TuckerType, TuckerWitness, classify, generate, pattern_size

__version__ = "0.1.0"

__all__ = [
    "AsteroidalTriple",
    "BinaryMatrix",
    "BipartiteGraph",
    "DetectorOutcome",
    "MatrixParseError",
    "Side",
    "TuckerType",
    "TuckerWitness",
    "Vertex",
    "VertexMask",
    "build_graph",
    "check_c1p",
    "classify",
    "find_min_triple",
    "find_min_tucker",
    "find_min_type1",
    "find_min_type3",
    "find_type3_conditional",
    "find_type4",
    "find_type4_conditional",
    "find_type5",
    "find_type5_conditional",
    "generate",
    "normalize",
    "oracle_c1p",
    "oracle_is_minimal_pattern",
    "oracle_min_obstruction",
    "parse_matrix",
    "pattern_size",
    "serialize_matrix",
    "stats",
    "triple_span",
]
