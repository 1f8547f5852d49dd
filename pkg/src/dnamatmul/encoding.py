"""Vertex strand assignment and edge strand synthesis."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field, replace
from typing import Mapping

from .errors import EncodingExhausted, StrandCollision, ValidationError
from .graph import Edge, LayeredGraph, VertexId, assign_labels, validate_strand_length
from .strand import BASES, complement, halves, parse_strand, random_strand

DEFAULT_MAX_ATTEMPTS = 10_000


class CollisionPolicy(str, enum.Enum):
    """How strongly random vertex strands are kept apart.

    ``RAW`` and ``UNIQUE_STRANDS`` only forbid identical full strands, so two
    vertices may still share a half and an edge strand can then anneal to the
    wrong vertex.  ``UNIQUE_HALVES`` also keeps every half distinct, which
    rules such spurious attachments out.
    """

    UNIQUE_HALVES = "unique-halves"
    UNIQUE_STRANDS = "unique-strands"
    RAW = "raw"


@dataclass(frozen=True, eq=False)
class Encoding:
    strand_length: int
    vertex_to_strand: Mapping[VertexId, str]
    strand_to_vertex: Mapping[str, VertexId]
    labels: Mapping[VertexId, str]
    edge_strands: Mapping[Edge, str] = field(default_factory=dict)
    policy: CollisionPolicy = CollisionPolicy.UNIQUE_HALVES

    @property
    def half(self) -> int:
        return self.strand_length // 2

    def strand(self, v: VertexId) -> str:
        return self.vertex_to_strand[v]

    def label(self, v: VertexId) -> str:
        return self.labels[v]


def _capacity(strand_length: int, policy: CollisionPolicy) -> tuple[int, int]:
    """(distinct items available, items needed per vertex)."""
    if policy is CollisionPolicy.UNIQUE_HALVES:
        return len(BASES) ** (strand_length // 2), 2
    return len(BASES) ** strand_length, 1


def encode_vertices(
    graph: LayeredGraph,
    strand_length: int,
    policy: CollisionPolicy | str = CollisionPolicy.UNIQUE_HALVES,
    rng: random.Random | None = None,
    *,
    labels=None,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Encoding:
    """Give every vertex a random strand, rejection-sampling collisions away.

    Vertices are visited layer-major and each draw is retried until it fits
    ``policy``.  ``max_attempts`` bounds the total number of rejected draws
    over the whole assignment.
    """
    validate_strand_length(strand_length)
    policy = CollisionPolicy(policy)
    if rng is None:
        rng = random.Random(0)
    label_map = assign_labels(graph, labels)

    available, per_vertex = _capacity(strand_length, policy)
    if graph.vertex_count * per_vertex > available:
        raise EncodingExhausted(
            f"{graph.vertex_count} vertices need {graph.vertex_count * per_vertex} distinct "
            f"{'halves' if per_vertex == 2 else 'strands'}, only {available} exist "
            f"at strand length {strand_length}"
        )

    used_strands: set[str] = set()
    used_halves: set[str] = set()
    vertex_to_strand: dict[VertexId, str] = {}
    rejected = 0
    for v in graph.vertices():
        while True:
            s = random_strand(strand_length, rng)
            if s not in used_strands:
                if policy is not CollisionPolicy.UNIQUE_HALVES:
                    break
                first, second = halves(s)
                if first != second and first not in used_halves and second not in used_halves:
                    used_halves.update((first, second))
                    break
            rejected += 1
            if rejected > max_attempts:
                raise EncodingExhausted(
                    f"gave up after {max_attempts} rejected draws at vertex {label_map[v]!r}; "
                    f"strand length {strand_length} is too small for {graph.vertex_count} vertices"
                )
        used_strands.add(s)
        vertex_to_strand[v] = s

    return Encoding(
        strand_length=strand_length,
        vertex_to_strand=vertex_to_strand,
        strand_to_vertex={s: v for v, s in vertex_to_strand.items()},
        labels=label_map,
        policy=policy,
    )


def encoding_from_strands(
    graph: LayeredGraph,
    strands,
    policy: CollisionPolicy | str = CollisionPolicy.RAW,
    *,
    labels=None,
) -> Encoding:
    """Build an encoding from explicitly chosen vertex strands.

    ``strands`` is either a mapping ``VertexId -> strand`` or a sequence of
    per-layer strand lists.  The strands must satisfy ``policy``; full strands
    must always be pairwise distinct so that decoding stays well defined.
    """
    policy = CollisionPolicy(policy)
    vertices = list(graph.vertices())
    if isinstance(strands, Mapping):
        given = {VertexId(*k): parse_strand(s) for k, s in strands.items()}
    else:
        layers = list(strands)
        if len(layers) != len(graph.layer_sizes) or any(
            len(layer) != size for layer, size in zip(layers, graph.layer_sizes)
        ):
            raise ValidationError("vertex strands do not match the graph's layer sizes")
        given = {
            VertexId(i, j): parse_strand(s)
            for i, layer in enumerate(layers)
            for j, s in enumerate(layer)
        }
    if set(given) != set(vertices):
        raise ValidationError("vertex strands must cover every vertex exactly once")

    lengths = {len(s) for s in given.values()}
    if len(lengths) != 1:
        raise ValidationError(f"vertex strands have mixed lengths {sorted(lengths)}")
    strand_length = validate_strand_length(lengths.pop())

    inverse: dict[str, VertexId] = {}
    for v in vertices:
        s = given[v]
        if s in inverse:
            raise StrandCollision(f"vertices {inverse[s]} and {v} share strand {s}")
        inverse[s] = v
    if policy is CollisionPolicy.UNIQUE_HALVES:
        owner: dict[str, VertexId] = {}
        for v in vertices:
            for h in halves(given[v]):
                if h in owner:
                    raise StrandCollision(f"half {h} occurs in both {owner[h]} and {v}")
                owner[h] = v

    return Encoding(
        strand_length=strand_length,
        vertex_to_strand={v: given[v] for v in vertices},
        strand_to_vertex=inverse,
        labels=assign_labels(graph, labels),
        policy=policy,
    )


def edge_strand(source: str, dest: str) -> str:
    """Splint strand joining ``source`` to ``dest``.

    Complement of the source's second half followed by the complement of the
    destination's first half.
    """
    return complement(halves(source)[1]) + complement(halves(dest)[0])


def synthesize_edge_strands(graph: LayeredGraph, encoding: Encoding) -> Encoding:
    edges = {
        (u, v): edge_strand(encoding.vertex_to_strand[u], encoding.vertex_to_strand[v])
        for u, v in graph.edges
    }
    return replace(encoding, edge_strands=edges)


def encode(
    graph: LayeredGraph,
    strand_length: int = 10,
    policy: CollisionPolicy | str = CollisionPolicy.UNIQUE_HALVES,
    seed: int = 0,
    *,
    labels=None,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> Encoding:
    """Seeded vertex assignment plus edge synthesis in one call."""
    rng = random.Random(seed)
    enc = encode_vertices(
        graph, strand_length, policy, rng, labels=labels, max_attempts=max_attempts
    )
    return synthesize_edge_strands(graph, enc)
