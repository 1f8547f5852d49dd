"""Boolean matrix chains and their layered graphs.

A chain of ``L`` matrices becomes a graph with ``L + 1`` layers.  Layer 0 holds
one vertex per row of the first matrix, layer ``i`` (``1 <= i < L``) one per
row of matrix ``i + 1`` and the last layer one per column of the last matrix.
Entry ``(j, k)`` of matrix ``i + 1`` being 1 puts an edge from vertex ``j`` of
layer ``i`` to vertex ``k`` of layer ``i + 1``.
"""

from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import (
    ChainTooShort,
    DimensionMismatch,
    DuplicateLabel,
    EmptyMatrix,
    LabelCountMismatch,
    NonBooleanEntry,
    OddStrandLength,
    ValidationError,
)

Matrix = tuple[tuple[int, ...], ...]


class VertexId(NamedTuple):
    layer: int
    index: int


Edge = tuple[VertexId, VertexId]


@dataclass(frozen=True)
class MatrixChain:
    matrices: tuple[Matrix, ...]

    def __len__(self) -> int:
        return len(self.matrices)

    @property
    def rows(self) -> int:
        return len(self.matrices[0])

    @property
    def cols(self) -> int:
        return len(self.matrices[-1][0])

    def ones(self) -> int:
        return sum(sum(row) for m in self.matrices for row in m)


@dataclass(frozen=True)
class LayeredGraph:
    layer_sizes: tuple[int, ...]
    edges: tuple[Edge, ...]

    @property
    def chain_length(self) -> int:
        return len(self.layer_sizes) - 1

    @property
    def vertex_count(self) -> int:
        return sum(self.layer_sizes)

    def vertices(self) -> Iterator[VertexId]:
        """Vertices in layer-major order."""
        for layer, size in enumerate(self.layer_sizes):
            for index in range(size):
                yield VertexId(layer, index)

    def vertex_ids(self) -> dict[VertexId, int]:
        """Dense integer id of every vertex, layer-major."""
        return {v: i for i, v in enumerate(self.vertices())}

    def successors(self) -> dict[VertexId, list[VertexId]]:
        out: dict[VertexId, list[VertexId]] = {v: [] for v in self.vertices()}
        for u, v in self.edges:
            out[u].append(v)
        return out


def _check_entry(value, where: str) -> int:
    # bool is an int subclass; floats, strings and nested lists are rejected
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int) and value in (0, 1):
        return value
    raise NonBooleanEntry(f"{where}: entry {value!r} is not 0 or 1")


def validate_strand_length(strand_length: int) -> int:
    if isinstance(strand_length, bool) or not isinstance(strand_length, int):
        raise OddStrandLength(f"strand length must be an integer, got {strand_length!r}")
    if strand_length < 2 or strand_length % 2:
        raise OddStrandLength(f"strand length must be even and >= 2, got {strand_length}")
    return strand_length


def validate_chain(raw: Sequence, strand_length: int = 10) -> MatrixChain:
    """Check a list of 0/1 matrices and freeze it into a :class:`MatrixChain`."""
    validate_strand_length(strand_length)
    if not isinstance(raw, (list, tuple)):
        raise DimensionMismatch("matrices must be a list of matrices")
    if len(raw) < 2:
        raise ChainTooShort(f"need at least 2 matrices, got {len(raw)}")

    frozen = []
    for m, matrix in enumerate(raw, start=1):
        if not isinstance(matrix, (list, tuple)):
            raise DimensionMismatch(f"matrix {m} is not a list of rows")
        if not matrix:
            raise EmptyMatrix(f"matrix {m} has no rows")
        rows = []
        width = None
        for r, row in enumerate(matrix):
            if not isinstance(row, (list, tuple)):
                raise DimensionMismatch(f"matrix {m} row {r} is not a list")
            if not row:
                raise EmptyMatrix(f"matrix {m} row {r} is empty")
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionMismatch(
                    f"matrix {m} is ragged: row {r} has {len(row)} entries, expected {width}"
                )
            rows.append(tuple(_check_entry(x, f"matrix {m} row {r}") for x in row))
        frozen.append(tuple(rows))

    for m in range(1, len(frozen)):
        left_cols = len(frozen[m - 1][0])
        right_rows = len(frozen[m])
        if left_cols != right_rows:
            raise DimensionMismatch(
                f"matrix {m} has {left_cols} columns but matrix {m + 1} has {right_rows} rows"
            )
    return MatrixChain(tuple(frozen))


def build_layered_graph(chain: MatrixChain) -> LayeredGraph:
    sizes = [len(m) for m in chain.matrices] + [chain.cols]
    edges = []
    for layer, matrix in enumerate(chain.matrices):
        for j, row in enumerate(matrix):
            for k, entry in enumerate(row):
                if entry:
                    edges.append((VertexId(layer, j), VertexId(layer + 1, k)))
    return LayeredGraph(tuple(sizes), tuple(edges))


def auto_labels() -> Iterator[str]:
    """a, b, ..., z, a1, b1, ..., z1, a2, ..."""
    for suffix in itertools.chain([""], itertools.count(1)):
        for letter in string.ascii_lowercase:
            yield f"{letter}{suffix}"


def assign_labels(graph: LayeredGraph, user_labels=None) -> dict[VertexId, str]:
    """Label every vertex.

    ``user_labels`` may be a flat sequence (layer-major), a sequence of
    per-layer sequences, or a mapping from :class:`VertexId` to label.  With
    no labels, names are generated by :func:`auto_labels`.
    """
    vertices = list(graph.vertices())
    if user_labels is None:
        return dict(zip(vertices, auto_labels()))

    if isinstance(user_labels, dict):
        keys = {VertexId(*k) for k in user_labels}
        if keys != set(vertices):
            raise LabelCountMismatch(
                f"label keys do not cover the {len(vertices)} vertices exactly"
            )
        labels = {VertexId(*k): v for k, v in user_labels.items()}
        flat = [labels[v] for v in vertices]
    else:
        seq = list(user_labels)
        if seq and all(isinstance(x, (list, tuple)) for x in seq):
            if len(seq) != len(graph.layer_sizes):
                raise LabelCountMismatch(
                    f"got labels for {len(seq)} layers, graph has {len(graph.layer_sizes)}"
                )
            for layer, (given, size) in enumerate(zip(seq, graph.layer_sizes)):
                if len(given) != size:
                    raise LabelCountMismatch(
                        f"layer {layer} has {size} vertices but {len(given)} labels"
                    )
            flat = [x for layer in seq for x in layer]
        else:
            flat = seq
        if len(flat) != len(vertices):
            raise LabelCountMismatch(
                f"graph has {len(vertices)} vertices but {len(flat)} labels were given"
            )

    for label in flat:
        if not isinstance(label, str) or not label:
            raise ValidationError(f"label {label!r} is not a non-empty string")
    seen = set()
    for label in flat:
        if label in seen:
            raise DuplicateLabel(f"label {label!r} used more than once")
        seen.add(label)
    return dict(zip(vertices, flat))
