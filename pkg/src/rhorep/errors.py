"""
Exception hierarchy shared by the library and the CLI.

The CLI maps ParameterError to a usage error (exit 2) and every other
RhorepError to an internal failure (exit 1).
"""

from typing import Any, Optional


class RhorepError(Exception):
    """Base class for every error raised by rhorep."""


class ParameterError(RhorepError, ValueError):
    """Out-of-range parameters, malformed braid words, violated modular conditions."""


class FieldMismatchError(RhorepError, TypeError):
    """Arithmetic between elements of two different cyclotomic fields."""


class NotInvertibleError(RhorepError, ZeroDivisionError):
    """Inverse of zero or division by zero."""


class SpecializationError(NotInvertibleError):
    """A denominator vanishes at the requested specialization point."""

    def __init__(self, message: str, denominator: Any = None):
        super().__init__(message)
        self.denominator = denominator


class InconsistentSystemError(RhorepError, ArithmeticError):
    """A linear system that has to be solvable is not (or not uniquely)."""

    def __init__(self, message: str, rank: Optional[int] = None, augmented_rank: Optional[int] = None):
        super().__init__(message)
        self.rank = rank
        self.augmented_rank = augmented_rank


class ConsistencyError(RhorepError, AssertionError):
    """A closed formula disagrees with the tensor-space computation."""

    def __init__(self, message: str, detail: Optional[dict] = None):
        super().__init__(message)
        self.detail = detail or {}
