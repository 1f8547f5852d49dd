"""Exception hierarchy.

Validation problems (bad matrices, labels, strands, input documents) derive
from :class:`ValidationError`; instances too large for the simulator derive
from :class:`CapacityError`.  The CLI maps the two families to distinct exit
codes.
"""


class SimulationError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SimulationError, ValueError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NonBooleanEntry(ValidationError):
    pass


class EmptyMatrix(ValidationError):
    pass


class ChainTooShort(ValidationError):
    pass


class OddStrandLength(ValidationError):
    pass


class InvalidBase(ValidationError):
    pass


class LabelCountMismatch(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class ShapeMismatch(ValidationError):
    pass


class UnknownStrandSegment(ValidationError):
    pass


class ParseError(ValidationError):
    """Malformed input document.  ``line``/``column`` are 1-based when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class CapacityError(SimulationError):
    pass


class EncodingExhausted(CapacityError):
    pass


class PathExplosion(CapacityError):
    pass


class StrandCollision(ValidationError):
    """Supplied vertex strands violate the requested collision policy."""
