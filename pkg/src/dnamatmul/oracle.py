"""Classical ground truth: Boolean products and brute-force path enumeration.

Nothing here touches strands or the growth kernels, so these results can be
used to check the simulation independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import DimensionMismatch, PathExplosion, ShapeMismatch
from .graph import LayeredGraph, MatrixChain, VertexId

DEFAULT_PATH_CAP = 1_000_000


def boolean_matmul(a, b) -> list[list[int]]:
    """OR-of-ANDs product of two 0/1 matrices."""
    if not a or not b or len(a[0]) != len(b):
        raise DimensionMismatch(
            f"cannot multiply {len(a)}x{len(a[0]) if a else 0} by "
            f"{len(b)}x{len(b[0]) if b else 0}"
        )
    inner = len(b)
    return [
        [int(any(a[i][k] and b[k][j] for k in range(inner))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def boolean_chain_product(chain: MatrixChain) -> list[list[int]]:
    return reduce(boolean_matmul, chain.matrices)


def enumerate_paths_dfs(
    graph: LayeredGraph, cap: int = DEFAULT_PATH_CAP
) -> set[tuple[VertexId, ...]]:
    """All directed paths with at least one vertex, by explicit-stack DFS."""
    succ = graph.successors()
    found: set[tuple[VertexId, ...]] = set()
    for start in graph.vertices():
        stack = [(start,)]
        while stack:
            path = stack.pop()
            found.add(path)
            if len(found) > cap:
                raise PathExplosion(f"more than {cap} paths in the graph")
            for nxt in succ[path[-1]]:
                stack.append(path + (nxt,))
    return found


@dataclass(frozen=True)
class VerificationReport:
    match: bool
    mismatched_entries: list[tuple[int, int, int, int]] = field(default_factory=list)
    false_positive_only: bool = True
    expected: list[list[int]] = field(default_factory=list)


def verify(simulated, chain: MatrixChain) -> VerificationReport:
    """Compare a simulated product with the classical one entry by entry.

    Mismatches are ``(row, col, simulated, expected)``.
    """
    expected = boolean_chain_product(chain)
    if len(simulated) != len(expected) or any(
        len(s) != len(e) for s, e in zip(simulated, expected)
    ):
        raise ShapeMismatch(
            f"simulated product is {len(simulated)}x{len(simulated[0]) if simulated else 0}, "
            f"expected {len(expected)}x{len(expected[0])}"
        )
    mismatches = [
        (i, j, int(s), e)
        for i, (srow, erow) in enumerate(zip(simulated, expected))
        for j, (s, e) in enumerate(zip(srow, erow))
        if int(s) != e
    ]
    return VerificationReport(
        match=not mismatches,
        mismatched_entries=mismatches,
        false_positive_only=all(s == 1 and e == 0 for _, _, s, e in mismatches),
        expected=expected,
    )
