"""Command-line entry point.

Exit codes: 0 success (a verification mismatch is still a success), 1 bad
input, 2 encoding exhausted or path explosion, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .encoding import CollisionPolicy
from .errors import CapacityError, ValidationError
from .pipeline import (
    DEFAULT_STRAND_LENGTH,
    MAX_SEED,
    Mode,
    SimulationConfig,
    parse_input,
    simulate_input,
)
from .report import emit_dot, format_machine, format_quiet, format_text

log = logging.getLogger("dnamatmul")

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_IO = 0, 1, 2, 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dnamatmul",
        description="Simulate DNA-based Boolean matrix chain multiplication.",
    )
    p.add_argument("--input", metavar="PATH", default="-",
                   help="JSON input document ('-' for stdin, the default)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--strand-length", type=int, default=None,
                   help=f"even vertex strand length (default: document value or {DEFAULT_STRAND_LENGTH})")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.EXHAUSTIVE.value)
    p.add_argument("--trials", type=_positive_int, default=1000,
                   help="random assemblies in stochastic mode")
    p.add_argument("--collision-policy", choices=[c.value for c in CollisionPolicy],
                   default=CollisionPolicy.UNIQUE_HALVES.value)
    p.add_argument("--path-cap", type=_positive_int, default=1_000_000)
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.add_argument("--emit-dot", metavar="PATH", help="also write the layered graph as DOT")
    p.add_argument("--quiet", action="store_true", help="print the product matrix only")
    return p


def run(args: argparse.Namespace, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        log.error("cannot read input: %s", exc)
        return EXIT_IO

    try:
        doc = parse_input(text)
        strand_length = args.strand_length
        if strand_length is None:
            strand_length = doc.strand_length or DEFAULT_STRAND_LENGTH
        config = SimulationConfig(
            strand_length=strand_length,
            seed=args.seed,
            mode=args.mode,
            trials=args.trials,
            collision_policy=args.collision_policy,
            path_cap=args.path_cap,
        )
        report = simulate_input(doc, config)
    except ValidationError as exc:
        log.error("invalid input: %s", exc)
        return EXIT_INPUT
    except CapacityError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_CAPACITY

    if args.quiet:
        out = format_quiet(report)
    elif args.format == "machine":
        out = format_machine(report)
    else:
        out = format_text(report)

    try:
        if args.emit_dot:
            with open(args.emit_dot, "w", encoding="utf-8") as fh:
                fh.write(emit_dot(report.graph, report.encoding.labels))
        stdout.write(out)
    except OSError as exc:
        log.error("cannot write output: %s", exc)
        return EXIT_IO
    return EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
