from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .construction import ConstructionReport


__all__ = [
    "FingerprintCodeError",
    "DimensionError",
    "DomainError",
    "AlphabetError",
    "CapacityError",
    "ParameterError",
    "PreconditionError",
    "InfeasibleConstructionError",
    "CodeFileError",
]


class FingerprintCodeError(ValueError):
    """Base class of every error raised by this library."""


class DimensionError(FingerprintCodeError):
    """Words of different lengths were combined."""


class DomainError(FingerprintCodeError):
    """An operation needs a non-empty set of words."""


class AlphabetError(FingerprintCodeError):
    """Alphabet size or symbol out of range."""


class CapacityError(FingerprintCodeError):
    """An enumeration would exceed the configured ceiling."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(
            f"{what} has size {size}, which exceeds the ceiling of {limit}"
        )
        self.what = what
        self.size = size
        self.limit = limit


class ParameterError(FingerprintCodeError):
    pass


class PreconditionError(FingerprintCodeError):
    pass


class InfeasibleConstructionError(FingerprintCodeError):
    """The construction cannot be completed for this code and group count.

    The partial report collected up to the failing step is kept in
    :attr:`report`.
    """

    def __init__(self, message: str, report: ConstructionReport):
        super().__init__(message)
        self.report = report


class CodeFileError(FingerprintCodeError):
    pass
