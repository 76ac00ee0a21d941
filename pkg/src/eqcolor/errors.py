"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class EqcolorError(Exception):
    """Base class for all package errors."""


class InputError(EqcolorError, ValueError):
    """Raised when arguments violate a documented precondition."""


class InvariantError(EqcolorError, RuntimeError):
    """Raised when an internal invariant fails.

    Carries a context mapping with whatever state helps diagnose the
    failure, typically the offending vertex and the pipeline stage.
    """

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.context = context or {}


class ParseError(EqcolorError, ValueError):
    """Raised when a document cannot be parsed into a domain object."""

    def __init__(self, message: str, context: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.context = context or {}
