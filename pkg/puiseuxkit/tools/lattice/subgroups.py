"""
Explicit subgroups of (Z/mZ)^r and the Galois action on monomials.

The group element (a_1, ..., a_r) sends X_l to w^(a_l) X_l for a primitive
m-th root of unity w, so the monomial with exponent v picks up w^(sum a_l v_l).
Only that exponent mod m is ever needed, so w itself is never represented.
"""
import logging
from itertools import product
from typing import Dict, Iterable, List, Optional

from ...config import get_settings
from ...errors import ArgumentError, DimensionError, GroupTooLargeError
from ...schemas.domain import ExponentVector, ModSubgroup

logger = logging.getLogger(__name__)


def _prepare(
    vectors: Iterable[ExponentVector],
    m: int,
    r: Optional[int],
) -> tuple:
    if m < 1:
        raise ArgumentError(f"modulus must be positive, got {m}")
    vectors = [tuple(int(x) for x in v) for v in vectors]
    if r is None:
        if not vectors:
            raise ArgumentError("rank r is required for an empty set of vectors")
        r = len(vectors[0])
    if any(len(v) != r for v in vectors):
        raise DimensionError(f"all vectors must have length {r}")
    limit = get_settings().max_group_order
    if m ** r > limit:
        raise GroupTooLargeError(
            f"(Z/{m}Z)^{r} has {m ** r} elements, above PUISEUX_MAX_GROUP_ORDER={limit}"
        )
    return vectors, r


def galois_character(a: ExponentVector, v: ExponentVector, m: int) -> int:
    """Exponent of w acquired by X^(v/m) under the element a: sum a_l v_l mod m."""
    if len(a) != len(v):
        raise DimensionError(f"group element of length {len(a)} against exponent of length {len(v)}")
    return sum(x * y for x, y in zip(a, v)) % m


def galois_twist(exponents: Iterable[ExponentVector], a: ExponentVector, m: int) -> Dict[ExponentVector, int]:
    """Per exponent, the power of w its monomial is multiplied by under a."""
    return {tuple(v): galois_character(a, v, m) for v in exponents}


def span(
    vectors: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> ModSubgroup:
    """
    Subgroup of (Z/mZ)^r generated by the vectors reduced mod m.

    Args:
        vectors: Generators (any integers; reduced mod m)
        m: Modulus
        r: Rank, needed only when vectors is empty

    Returns:
        The generated subgroup, materialized by closure
    """
    vectors, r = _prepare(vectors, m, r)
    generators = {tuple(x % m for x in v) for v in vectors}
    zero = (0,) * r
    generators.discard(zero)
    elements = {zero}
    frontier = [zero]
    while frontier:
        reached = []
        for element in frontier:
            for generator in generators:
                total = tuple((x + y) % m for x, y in zip(element, generator))
                if total not in elements:
                    elements.add(total)
                    reached.append(total)
        frontier = reached
    return ModSubgroup(m=m, r=r, elements=frozenset(elements))


def stabilizer(
    vectors: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> ModSubgroup:
    """
    Group elements a with sum a_l i_l = 0 mod m for every given vector.

    This is Gal(L_m / K[P]) when the vectors are P.
    """
    vectors, r = _prepare(vectors, m, r)
    residues = {tuple(x % m for x in v) for v in vectors}
    elements = frozenset(
        a for a in product(range(m), repeat=r)
        if all(galois_character(a, v, m) == 0 for v in residues)
    )
    return ModSubgroup(m=m, r=r, elements=elements)


def conjugate_count(
    exponents: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> int:
    """
    Number of distinct conjugates of a series with the given support.

    Two group elements give the same conjugate exactly when they twist every
    monomial by the same root of unity, so conjugates are counted by their
    twist signatures.
    """
    exponents, r = _prepare(exponents, m, r)
    ordered: List[ExponentVector] = sorted(set(exponents))
    signatures = {
        tuple(galois_character(a, v, m) for v in ordered)
        for a in product(range(m), repeat=r)
    }
    logger.debug("%d conjugates for %d exponents over m=%d", len(signatures), len(ordered), m)
    return len(signatures)
