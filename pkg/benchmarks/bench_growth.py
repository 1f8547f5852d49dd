"""Compare the compiled and pure-Python growth kernels.

    python benchmarks/bench_growth.py [--repeat N]

Two timings per case on dense all-ones chains, where path count grows
geometrically with chain length:

kernel  annealing table plus round growth, integers only
full    exhaustive assembly including Path objects and the result set
"""

import argparse
import time

from dnamatmul import assemble_paths_exhaustive, build_layered_graph, encode, validate_chain
from dnamatmul._backend import AVAILABLE
from dnamatmul.hybridization import _anneal

CASES = [
    # (dimension, chain length)
    (3, 6),
    (4, 6),
    (5, 6),
    (6, 6),
    (4, 8),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def kernel_only(enc, graph, name):
    ann = _anneal(enc, graph, name)
    parents, _ = AVAILABLE[name].grow_forest(ann.successors(), graph.chain_length, 10**8)
    return parents


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = sorted(AVAILABLE)
    header = " ".join(f"{stage + ':' + b:>16}" for stage in ("kernel", "full") for b in backends)
    print(f"{'chain':>10} {'paths':>9} {header}")
    for dim, length in CASES:
        chain = validate_chain([[[1] * dim] * dim] * length)
        graph = build_layered_graph(chain)
        enc = encode(graph, 20, seed=1)
        cells = []
        sizes = set()
        for stage in ("kernel", "full"):
            for b in backends:
                if stage == "kernel":
                    t, out = best_of(lambda: kernel_only(enc, graph, b), args.repeat)
                else:
                    t, out = best_of(
                        lambda: assemble_paths_exhaustive(enc, graph, backend=b), args.repeat
                    )
                sizes.add(len(out))
                cells.append(f"{t * 1e3:>14.1f}ms")
        assert len(sizes) == 1, "backends disagree"
        print(f"{dim}x{dim}^{length:<4} {sizes.pop():>9} {' '.join(cells)}")


if __name__ == "__main__":
    main()
