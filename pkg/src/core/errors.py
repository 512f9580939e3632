"""
Exception hierarchy for SchemeMate.

Every error carries the process exit code the command-line front end maps
it to: 2 for bad input, 3 for a failed internal verification.
"""

from __future__ import annotations

from typing import Any, Dict, Optional


class SchemeError(Exception):
    """Base class of all library errors."""

    exit_code = 2

    def __init__(self, message: str = "", **details: Any):
        super().__init__(message or self.__class__.__name__)
        self.details: Dict[str, Any] = details

    @property
    def kind(self) -> str:
        return self.__class__.__name__


# Input errors (exit 2)

class NotARainbow(SchemeError):
    """Colouring violates diagonal separation or transpose closure."""

    def __init__(self, reason: str, **details: Any):
        super().__init__(f"not a rainbow: {reason}", **details)
        self.reason = reason


class NonSquare(SchemeError):
    pass


class OrderMismatch(SchemeError):
    pass


class NotSymmetric(SchemeError):
    pass


class NotIrreflexive(SchemeError):
    pass


class NotHomogeneous(SchemeError):
    pass


class NotJordan(SchemeError):
    pass


class WrongRank(SchemeError):
    pass


class LabelMismatch(SchemeError):
    pass


class DivisibilityError(SchemeError):
    pass


class InfeasibleParams(SchemeError):
    pass


class SpecInvalid(SchemeError):
    pass


class BaseInvalid(SchemeError):
    pass


class BadFiberIndex(SchemeError):
    pass


class FormatError(SchemeError):
    """Malformed rainbow / spec file."""


# Internal verification failures (exit 3)

class InternalError(SchemeError):
    exit_code = 3


class TableVerificationFailed(InternalError):
    pass


class ArithmeticOverflow(InternalError):
    pass


def exit_code_for(error: Optional[BaseException]) -> int:
    """Map an exception to the CLI exit code contract."""
    if error is None:
        return 0
    if isinstance(error, SchemeError):
        return error.exit_code
    return 3


__all__ = [
    "SchemeError",
    "NotARainbow",
    "NonSquare",
    "OrderMismatch",
    "NotSymmetric",
    "NotIrreflexive",
    "NotHomogeneous",
    "NotJordan",
    "WrongRank",
    "LabelMismatch",
    "DivisibilityError",
    "InfeasibleParams",
    "SpecInvalid",
    "BaseInvalid",
    "BadFiberIndex",
    "FormatError",
    "InternalError",
    "TableVerificationFailed",
    "ArithmeticOverflow",
    "exit_code_for",
]
