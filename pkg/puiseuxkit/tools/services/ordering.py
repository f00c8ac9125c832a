"""
Monomial orderings on exponent vectors.
"""
from enum import Enum
from typing import Iterable, List, Optional

from sympy.polys.orderings import grevlex, grlex, lex

from ...config import ORDERING_KINDS, get_settings
from ...errors import ArgumentError, DimensionError, DomainError
from ...schemas.domain import ExponentVector


class Comparison(Enum):
    """Outcome of comparing two exponent vectors."""
    LESS = -1
    EQUAL = 0
    GREATER = 1


class MonomialOrdering:
    """A strict total order on exponent vectors of equal length."""

    _KEYS = {"lex": lex, "grlex": grlex, "grevlex": grevlex}

    def __init__(self, kind: Optional[str] = None):
        kind = (kind or get_settings().default_order).lower()
        if kind not in ORDERING_KINDS:
            raise ArgumentError(f"unknown ordering {kind!r}; expected one of {', '.join(ORDERING_KINDS)}")
        self.kind = kind
        self._key = self._KEYS[kind]

    @property
    def is_graded(self) -> bool:
        return self.kind in ("grlex", "grevlex")

    def key(self, vector: ExponentVector) -> tuple:
        return self._key(tuple(vector))

    def compare(self, a: ExponentVector, b: ExponentVector) -> Comparison:
        """
        Compare two exponent vectors.

        Args:
            a: First vector
            b: Second vector

        Returns:
            Comparison.LESS, EQUAL or GREATER

        Raises:
            DimensionError: If the vectors have different lengths
        """
        if len(a) != len(b):
            raise DimensionError(f"cannot compare vectors of length {len(a)} and {len(b)}")
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return Comparison.LESS
        if ka > kb:
            return Comparison.GREATER
        return Comparison.EQUAL

    def minimum(self, vectors: Iterable[ExponentVector]) -> ExponentVector:
        """Smallest vector of a nonempty collection."""
        vectors = list(vectors)
        if not vectors:
            raise DomainError("minimum of an empty set of exponents")
        if len({len(v) for v in vectors}) > 1:
            raise DimensionError("exponent vectors of different lengths")
        return min(vectors, key=self.key)

    def sort(self, vectors: Iterable[ExponentVector]) -> List[ExponentVector]:
        return sorted(vectors, key=self.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrdering) and other.kind == self.kind

    def __hash__(self) -> int:
        return hash(self.kind)

    def __repr__(self) -> str:
        return f"MonomialOrdering({self.kind!r})"


def compare(a: ExponentVector, b: ExponentVector, ordering: MonomialOrdering) -> Comparison:
    """Module-level shortcut for MonomialOrdering.compare."""
    return ordering.compare(a, b)
