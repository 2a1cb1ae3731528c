"""Exception types shared across the package."""


class DCLError(Exception):
    """Base class for all package errors."""


class GraphInputError(DCLError, ValueError):
    """Malformed graph, labeling, vector or vertex reference.

    ``line`` is the 1-based line number when the error came from parsing text.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class EnumerationCapError(DCLError):
    """An exhaustive enumeration would exceed its configured cap."""

    def __init__(self, what, cap):
        super().__init__(f"{what} enumeration exceeded cap of {cap}")
        self.what = what
        self.cap = cap


class InconsistentDecompositionError(DCLError):
    """A decomposition does not have the shape the labeling procedure needs."""


class CharacterizationError(DCLError):
    """Recognition routes disagree; this would contradict the forbidden-subgraph characterization."""
