"""
Exception hierarchy shared by every app.
"""


class K33LabError(Exception):
    """Base class for all errors raised by the enumeration and graph code."""


class PreconditionError(K33LabError, ValueError):
    """An operation was called with input violating its precondition."""


class InsufficientBasisError(K33LabError):
    """
    The planar basis does not reach the order a computation needs.
    """

    def __init__(self, required_n, available_n, what="the planar basis P"):
        self.required_n = required_n
        self.available_n = available_n
        message = f"insufficient basis: {what} must cover n <= {required_n}"
        if available_n is None or available_n < 0:
            message += " (no coverage available)"
        else:
            message += f" but only covers n <= {available_n}; first missing n = {available_n + 1}"
        super().__init__(message)


class TableParseError(K33LabError):
    """A coefficient table file is malformed."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GraphFormatError(K33LabError):
    """A graph file is malformed."""

    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class SizeLimitError(K33LabError):
    """A guarded exhaustive search refused an input that is too large."""


class LabelCollisionError(PreconditionError):
    """Networks substituted into a core share labels."""


class ConfigurationError(K33LabError):
    """A run configuration violates its invariants."""


class IntegralityError(K33LabError):
    """A class-valued series has a fractional or negative count."""
