"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SignedGhwError(Exception):
    """Base class; ``code`` is the short name the CLI reports."""

    code = "error"


class ArgumentError(SignedGhwError, ValueError):
    code = "argument-error"


class DomainError(SignedGhwError, ValueError):
    """A mathematical precondition (connectedness, range of r, ...) fails."""

    code = "domain-error"


class ResourceError(SignedGhwError, RuntimeError):
    """An exhaustive enumeration would exceed its size guard."""

    code = "resource-error"


class GraphParseError(SignedGhwError, ValueError):
    code = "parse-error"

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisagreementError(SignedGhwError, AssertionError):
    """Two independent routes produced different values."""

    code = "disagreement"
