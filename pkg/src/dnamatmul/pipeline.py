"""End-to-end simulation: input document -> trace report."""

from __future__ import annotations

import enum
import json
import random
from collections import Counter
from dataclasses import dataclass, field, replace

from .encoding import (
    DEFAULT_MAX_ATTEMPTS,
    CollisionPolicy,
    Encoding,
    encode_vertices,
    encoding_from_strands,
    synthesize_edge_strands,
)
from .errors import ParseError, ValidationError
from .graph import (
    LayeredGraph,
    MatrixChain,
    assign_labels,
    build_layered_graph,
    validate_chain,
    validate_strand_length,
)
from .hybridization import (
    DEFAULT_PATH_CAP,
    Path,
    assemble_paths_exhaustive,
    assemble_paths_stochastic,
)
from .oracle import VerificationReport, verify
from .readout import decode_product, filter_complete_paths

DEFAULT_STRAND_LENGTH = 10
MAX_SEED = 2**64 - 1


class Mode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    STOCHASTIC = "stochastic"


@dataclass(frozen=True)
class SimulationConfig:
    strand_length: int = DEFAULT_STRAND_LENGTH
    seed: int = 0
    mode: Mode = Mode.EXHAUSTIVE
    trials: int = 1000
    collision_policy: CollisionPolicy = CollisionPolicy.UNIQUE_HALVES
    path_cap: int = DEFAULT_PATH_CAP
    max_attempts: int = DEFAULT_MAX_ATTEMPTS

    def __post_init__(self):
        validate_strand_length(self.strand_length)
        if not 0 <= self.seed <= MAX_SEED:
            raise ValidationError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        for name in ("trials", "path_cap", "max_attempts"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be positive, got {getattr(self, name)}")
        object.__setattr__(self, "mode", Mode(self.mode))
        object.__setattr__(self, "collision_policy", CollisionPolicy(self.collision_policy))


@dataclass(frozen=True)
class SimulationInput:
    chain: MatrixChain
    labels: object = None
    strand_length: int | None = None
    vertex_strands: list[list[str]] | None = None


_KNOWN_KEYS = {"matrices", "labels", "strand_length", "vertex_strands"}


def parse_input(text: str) -> SimulationInput:
    """Parse a JSON input document.

    Keys: ``matrices`` (required, list of row-major 0/1 matrices),
    ``labels`` (optional, per-layer label lists), ``strand_length``
    (optional even integer) and ``vertex_strands`` (optional, per-layer
    strand lists that replace random assignment).
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    unknown = set(doc) - _KNOWN_KEYS
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    if "matrices" not in doc:
        raise ParseError("missing required key 'matrices'")

    strand_length = doc.get("strand_length")
    chain = validate_chain(
        doc["matrices"], DEFAULT_STRAND_LENGTH if strand_length is None else strand_length
    )
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list):
            raise ParseError("'labels' must be a list")
        assign_labels(build_layered_graph(chain), labels)
    strands = doc.get("vertex_strands")
    if strands is not None and not (
        isinstance(strands, list) and all(isinstance(layer, list) for layer in strands)
    ):
        raise ParseError("'vertex_strands' must be a list of per-layer lists")
    return SimulationInput(chain, labels, strand_length, strands)


@dataclass(frozen=True, eq=False)
class TraceReport:
    config: SimulationConfig
    graph: LayeredGraph
    encoding: Encoding
    paths: list[Path]
    complete_paths: list[Path]
    product: list[list[int]]
    verification: VerificationReport
    path_counts: Counter | None = field(default=None)

    def vertex_strands(self) -> list[tuple[str, str]]:
        enc = self.encoding
        return [(enc.labels[v], enc.vertex_to_strand[v]) for v in self.graph.vertices()]

    def edge_strands(self) -> list[tuple[tuple[str, str], str]]:
        enc = self.encoding
        edges = sorted(enc.edge_strands)
        return [((enc.labels[u], enc.labels[v]), enc.edge_strands[(u, v)]) for u, v in edges]


def simulate(
    chain: MatrixChain,
    config: SimulationConfig = SimulationConfig(),
    *,
    labels=None,
    vertex_strands=None,
) -> TraceReport:
    """Run the whole pipeline for one chain.

    With ``vertex_strands`` the random assignment is skipped and the given
    strands are checked against ``config.collision_policy`` instead.
    """
    graph = build_layered_graph(chain)
    rng = random.Random(config.seed)
    if vertex_strands is None:
        enc = encode_vertices(
            graph,
            config.strand_length,
            config.collision_policy,
            rng,
            labels=labels,
            max_attempts=config.max_attempts,
        )
    else:
        enc = encoding_from_strands(graph, vertex_strands, config.collision_policy, labels=labels)
    enc = synthesize_edge_strands(graph, enc)

    counts = None
    if config.mode is Mode.EXHAUSTIVE:
        paths = assemble_paths_exhaustive(enc, graph, cap=config.path_cap)
    else:
        counts = assemble_paths_stochastic(enc, graph, config.trials, rng)
        paths = frozenset(counts)
    complete = filter_complete_paths(paths, graph)
    product = decode_product(complete, graph)
    return TraceReport(
        config=config,
        graph=graph,
        encoding=enc,
        paths=sorted(paths),
        complete_paths=sorted(complete),
        product=product,
        verification=verify(product, chain),
        path_counts=counts,
    )


def simulate_input(sim_input: SimulationInput, config: SimulationConfig) -> TraceReport:
    """Simulate a parsed document; explicit vertex strands fix the strand length."""
    strands = sim_input.vertex_strands
    if strands and strands[0] and isinstance(strands[0][0], str):
        config = replace(config, strand_length=len(strands[0][0]))
    return simulate(
        sim_input.chain,
        config,
        labels=sim_input.labels,
        vertex_strands=strands,
    )
