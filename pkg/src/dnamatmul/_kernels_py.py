"""Pure-Python growth kernels.

Same signatures and results as the compiled ``_kernels`` extension; used
when the extension is missing or ``DNAMATMUL_PURE`` is set.

Paths are kept as a forest: path ``i`` is path ``parents[i]`` extended by
vertex ``vertices[i]`` (roots have parent ``-1``).  A path has exactly one
prefix, so growing only the paths added in the previous round never
produces the same path twice and no set lookups are needed.
"""

from .errors import PathExplosion
from .strand import BASE_PAIRS

NAME = "python"


def hybridization_table(tails: bytes, heads: bytes, half: int) -> list[list[int]]:
    """Row ``v`` lists the edges whose first half anneals to vertex ``v``'s tail.

    ``tails`` and ``heads`` are concatenations of ``half``-long ASCII strands.
    """
    tails_s = tails.decode("ascii")
    heads_s = heads.decode("ascii")
    n_edges = len(heads_s) // half
    table = []
    for v in range(len(tails_s) // half):
        tail = tails_s[v * half : (v + 1) * half]
        row = []
        for e in range(n_edges):
            head = heads_s[e * half : (e + 1) * half]
            if all(BASE_PAIRS[a] == b for a, b in zip(tail, head)):
                row.append(e)
        table.append(row)
    return table


def grow_forest(successors: list[list[int]], rounds: int, cap: int) -> tuple[list[int], list[int]]:
    n = len(successors)
    if n > cap:
        raise PathExplosion(f"{n} single-vertex paths already exceed the cap of {cap}")
    parents = [-1] * n
    vertices = list(range(n))
    start, end = 0, n
    for _ in range(rounds):
        if start == end:
            break
        for p in range(start, end):
            for dst in successors[vertices[p]]:
                parents.append(p)
                vertices.append(dst)
            if len(vertices) > cap:
                raise PathExplosion(f"more than {cap} paths after extending path {p}")
        start, end = end, len(vertices)
    return parents, vertices


def materialize(parents: list[int], vertices: list[int], objects: list) -> list[tuple]:
    """Expand the forest into tuples of ``objects[vertex]``."""
    paths: list[tuple] = []
    for parent, v in zip(parents, vertices):
        obj = objects[v]
        paths.append((obj,) if parent < 0 else paths[parent] + (obj,))
    return paths
