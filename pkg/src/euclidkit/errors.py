"""Exception hierarchy shared by all euclidkit modules."""

from __future__ import annotations


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GeometryError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class DegenerateInputError(DomainError):
    """Inputs collapse the operation (coincident points, zero radius, ...)."""


class InfeasibleConstructionError(GeometryError):
    """The requested figure does not exist for the given data."""


class NotConstructibleError(InfeasibleConstructionError):
    """The figure cannot be produced by the available ruler-and-compass macros."""


class ConstructionError(GeometryError):
    """Runtime failure while executing a construction program."""


class ScriptError(ConstructionError):
    """Parse error in a construction script, with source position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class UnresolvedNameError(ConstructionError):
    """An instruction references a name that is not in the workspace."""


class AssertionFailedError(ConstructionError):
    """An `assert` instruction failed; carries measured vs expected values."""

    def __init__(self, description: str, measured: float, expected: float, tolerance: float,
                 line: int | None = None):
        loc = f"line {line}: " if line is not None else ""
        super().__init__(
            f"{loc}assert failed: {description}: measured {measured!r}, "
            f"expected {expected!r} (tol {tolerance:g})"
        )
        self.description = description
        self.measured = measured
        self.expected = expected
        self.tolerance = tolerance
        self.line = line


class MacroPostconditionError(ConstructionError):
    """A macro's self-check failed after expansion (internal consistency guard)."""


class DegenerateGeometryWarning(UserWarning):
    """Emitted when a degenerate-but-admitted parameter (H=0, b=B) is used."""
