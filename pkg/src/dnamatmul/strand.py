"""DNA bases, strands and Watson-Crick hybridization.

Strands are plain ``str`` objects over the alphabet ``ACGT``.  Anything that
comes from outside the package goes through :func:`parse_strand` first; the
helpers below assume already-valid input.
"""

from __future__ import annotations

import random

from .errors import InvalidBase

BASES = "ACGT"
BASE_PAIRS = {"A": "T", "T": "A", "C": "G", "G": "C"}

_COMPLEMENT = str.maketrans(BASE_PAIRS)


def parse_strand(text: str) -> str:
    """Validate ``text`` as a strand and return it.

    Raises :class:`InvalidBase` for empty input or any character outside
    ``ACGT`` (lowercase and ambiguity codes included).
    """
    if not text:
        raise InvalidBase("strand must contain at least one base")
    for pos, ch in enumerate(text):
        if ch not in BASE_PAIRS:
            raise InvalidBase(f"invalid base {ch!r} at position {pos}")
    return text


def complement(strand: str) -> str:
    """Position-wise Watson-Crick complement (not reversed)."""
    return strand.translate(_COMPLEMENT)


def matches(x: str, y: str) -> bool:
    """True iff ``x`` and ``y`` hybridize: equal length, every position paired.

    Two empty strands match each other.
    """
    if len(x) != len(y):
        return False
    return all(BASE_PAIRS[a] == b for a, b in zip(x, y))


def random_strand(length: int, rng: random.Random) -> str:
    """Draw ``length`` bases uniformly and independently from ``rng``."""
    if length < 1:
        raise ValueError(f"strand length must be positive, got {length}")
    return "".join(rng.choices(BASES, k=length))


def halves(strand: str) -> tuple[str, str]:
    mid = len(strand) // 2
    return strand[:mid], strand[mid:]
