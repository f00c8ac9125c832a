"""
Exceptions raised by the library.

Everything the CLI reports with exit code 1 derives from PuiseuxError.
"""
from typing import Optional


class PuiseuxError(Exception):
    """Base class for domain, parse and oracle failures."""
    pass


class DimensionError(PuiseuxError):
    """Exponent vectors or matrices of incompatible length."""
    pass


class ArgumentError(PuiseuxError, ValueError):
    """A parameter is outside its admissible range."""
    pass


class DomainError(PuiseuxError):
    """The input is outside the domain of an operation (zero series, wrong variable count, ...)."""
    pass


class IncompleteCharacteristicError(PuiseuxError):
    """A branch characteristic whose gcd chain does not end in 1."""
    pass


class ExtensionError(PuiseuxError):
    """Division by a non-invertible element of a radical extension."""
    pass


class GroupTooLargeError(PuiseuxError):
    """Explicit enumeration of (Z/mZ)^r was refused by the configured limit."""
    pass


class OracleMismatchError(PuiseuxError):
    """An independent brute-force check disagreed with the engine."""
    pass


class SeriesSyntaxError(PuiseuxError):
    """Series text that does not match the grammar."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnsupportedSeriesError(SeriesSyntaxError):
    """Series text that parses but is outside what the tool accepts (negative exponents)."""
    pass
