"""Exception hierarchy shared across the package.

The three branches map onto the CLI exit codes: ParseError -> 1,
DomainError -> 2, InternalConsistencyError -> 3.
"""

from __future__ import annotations


class ModgfError(Exception):
    """Base class for all package errors."""


class ParseError(ModgfError):
    """Malformed input text. Carries the character position of the fault."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


class DomainError(ModgfError):
    """A precondition on otherwise well-formed input does not hold."""


class DimensionMismatchError(DomainError):
    """Matrix/vector shapes are incompatible."""


class SingularMatrixError(DomainError):
    """The system matrix has zero determinant."""


class NotSymmetricError(DomainError):
    """An operation requiring a symmetric Laurent polynomial got a lopsided one."""


class InsufficientDataError(DomainError):
    """Too few sequence terms to attempt a fit of the requested order."""


class InternalConsistencyError(ModgfError):
    """An internal cross-check failed; the computation cannot be trusted."""
