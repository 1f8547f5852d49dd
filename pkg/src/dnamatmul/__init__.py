"""Logical simulator for DNA-based Boolean matrix chain multiplication.

Matrices become a layered graph, vertices become random DNA strands, edges
become splint strands built from complemented halves, and path strands are
grown by simulated annealing.  Paths from the first to the last layer give
the Boolean product, which is checked against a classical oracle.
"""

from ._backend import BACKEND
from .encoding import (
    CollisionPolicy,
    Encoding,
    encode,
    encode_vertices,
    encoding_from_strands,
    synthesize_edge_strands,
)
from .errors import (
    CapacityError,
    ChainTooShort,
    DimensionMismatch,
    DuplicateLabel,
    EmptyMatrix,
    EncodingExhausted,
    InvalidBase,
    LabelCountMismatch,
    NonBooleanEntry,
    OddStrandLength,
    ParseError,
    PathExplosion,
    ShapeMismatch,
    SimulationError,
    StrandCollision,
    UnknownStrandSegment,
    ValidationError,
)
from .graph import (
    LayeredGraph,
    MatrixChain,
    VertexId,
    assign_labels,
    build_layered_graph,
    validate_chain,
)
from .hybridization import Path, assemble_paths_exhaustive, assemble_paths_stochastic
from .oracle import (
    VerificationReport,
    boolean_chain_product,
    boolean_matmul,
    enumerate_paths_dfs,
    verify,
)
from .pipeline import Mode, SimulationConfig, TraceReport, parse_input, simulate
from .readout import decode_path, decode_product, filter_complete_paths
from .report import emit_dot, format_machine, format_text, read_machine_product
from .strand import complement, matches, parse_strand, random_strand

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapacityError",
    "ChainTooShort",
    "CollisionPolicy",
    "DimensionMismatch",
    "DuplicateLabel",
    "EmptyMatrix",
    "Encoding",
    "EncodingExhausted",
    "F401",
    "F403",
    "InvalidBase",
    "LabelCountMismatch",
    "LayeredGraph",
    "MatrixChain",
    "Mode",
    "NonBooleanEntry",
    "OddStrandLength",
    "ParseError",
    "Path",
    "PathExplosion",
    "ShapeMismatch",
    "SimulationConfig",
    "SimulationError",
    "StrandCollision",
    "TraceReport",
    "UnknownStrandSegment",
    "ValidationError",
    "VerificationReport",
    "VertexId",
    "assemble_paths_exhaustive",
    "assemble_paths_stochastic",
    "assign_labels",
    "boolean_chain_product",
    "boolean_matmul",
    "build_layered_graph",
    "complement",
    "decode_path",
    "decode_product",
    "emit_dot",
    "encode",
    "encode_vertices",
    "encoding_from_strands",
    "enumerate_paths_dfs",
    "filter_complete_paths",
    "format_machine",
    "format_text",
    "matches",
    "parse_input",
    "parse_strand",
    "random_strand",
    "read_machine_product",
    "simulate",
    "synthesize_edge_strands",
    "validate_chain",
    "verify",
]
