"""Exception hierarchy shared across the package."""

from __future__ import annotations


class BorderBasisError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BorderBasisError):
    """Raised when an input file or expression cannot be parsed."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            where = f"line {line}" if col is None else f"line {line}, col {col}"
            message = f"{where}: {message}"
        super().__init__(message)


class PreconditionError(BorderBasisError):
    """Raised when a mathematical precondition of an operation is violated."""
