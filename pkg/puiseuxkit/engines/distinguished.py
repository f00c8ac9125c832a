"""
Distinguished exponents of a Puiseux series by the minor-gcd filtration.

Starting from M_0 = m * I_r, every exponent whose column leaves (r)gcd(M_l)
unchanged is discarded; the smallest survivor (for the chosen ordering) is
appended as the next column. The r-minor gcd strictly decreases with each
selection, so the loop ends after at most Omega(m^r) steps.
"""
import logging
from math import gcd
from typing import Iterable, List, Optional, Tuple

from ..config import get_settings
from ..errors import ArgumentError, DimensionError, DomainError
from ..schemas.domain import DistinguishedResult, ExponentVector, IntMatrix, PuiseuxSeries
from ..tools.lattice.smith import gcd_minors, smith_normal_form
from ..tools.lattice.subgroups import span, stabilizer
from ..tools.services.ordering import MonomialOrdering
from ..tools.services.series import support

logger = logging.getLogger(__name__)


def _as_vectors(exponents: Iterable[ExponentVector]) -> List[ExponentVector]:
    vectors = [tuple(int(x) for x in v) for v in exponents]
    for v in vectors:
        if any(x < 0 for x in v):
            raise ArgumentError(f"exponent vector {v} has a negative entry")
    return vectors


def _rank_of(*groups: List[ExponentVector], r: Optional[int] = None) -> int:
    lengths = {len(v) for group in groups for v in group}
    if r is not None:
        lengths.add(r)
    if not lengths:
        raise ArgumentError("cannot infer the variable count from empty exponent sets")
    if len(lengths) > 1:
        raise DimensionError(f"exponent vectors of different lengths: {sorted(lengths)}")
    return lengths.pop()


def augmented_matrix(m: int, columns: Iterable[ExponentVector], r: int) -> IntMatrix:
    """[m * I_r | columns]."""
    matrix = IntMatrix.scaled_identity(m, r)
    for column in columns:
        matrix = matrix.append_column(column)
    return matrix


def normalize_denominator(series: PuiseuxSeries) -> PuiseuxSeries:
    """
    Rewrite a series over its minimal denominator.

    Divides m and every exponent entry by g = gcd(m, all entries).

    Raises:
        DomainError: If the series is zero
    """
    if series.is_zero:
        raise DomainError("the zero series has no minimal denominator")
    g = gcd(series.m, *(entry for exponent in series.coefficients for entry in exponent))
    if g == 1:
        return series
    logger.debug("normalizing denominator %d by common factor %d", series.m, g)
    return PuiseuxSeries(
        r=series.r,
        m=series.m // g,
        coefficients={tuple(e // g for e in exponent): c for exponent, c in series.coefficients.items()},
    )


def extension_degree(
    pairs: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> int:
    """
    [K[P]:K] = m^r / (r)gcd([m * I_r | P]).

    Args:
        pairs: Exponent numerators P
        m: Common denominator
        r: Variable count, needed only for an empty P

    Returns:
        Degree of the extension generated by the monomials of P
    """
    if m < 1:
        raise ArgumentError(f"denominator must be positive, got {m}")
    pairs = _as_vectors(pairs)
    if not pairs:
        return 1
    r = _rank_of(pairs, r=r)
    return m ** r // gcd_minors(augmented_matrix(m, pairs, r), r)


def verify_corollary(
    exponents: Iterable[ExponentVector],
    pairs: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> bool:
    """True iff every exponent lies in the Z-span of P modulo m."""
    exponents, pairs = _as_vectors(exponents), _as_vectors(pairs)
    r = _rank_of(exponents, pairs, r=r)
    generated = span(pairs, m, r)
    return all(generated.contains(v) for v in exponents)


def is_distinguished_set(
    exponents: Iterable[ExponentVector],
    pairs: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> bool:
    """
    Check the defining property K(P) = K(zeta) through the Galois side.

    P must be a subset of the support and fix exactly the same group elements.
    """
    exponents, pairs = _as_vectors(exponents), _as_vectors(pairs)
    if not set(pairs) <= set(exponents):
        return False
    r = _rank_of(exponents, pairs, r=r)
    return stabilizer(pairs, m, r).elements == stabilizer(exponents, m, r).elements


def galois_group_structure(
    pairs: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> Tuple[int, ...]:
    """
    Cyclic decomposition of Gal(K[P]/K).

    With eta_1 | ... | eta_r the invariant factors of [m * I_r | P], the group is
    the sum of C_(m / eta_l); trivial factors are dropped and the orders are
    returned in increasing (divisibility) order.
    """
    if m < 1:
        raise ArgumentError(f"denominator must be positive, got {m}")
    pairs = _as_vectors(pairs)
    if not pairs:
        return ()
    r = _rank_of(pairs, r=r)
    etas = smith_normal_form(augmented_matrix(m, pairs, r))
    return tuple(sorted(m // eta for eta in etas if m // eta > 1))


class DistinguishedEngine:
    """Selects a set of distinguished exponents by the minor-gcd filtration."""

    def __init__(self, ordering: Optional[MonomialOrdering] = None):
        self.settings = get_settings()
        self.ordering = ordering or MonomialOrdering(self.settings.default_order)

    def compute(
        self,
        exponents: Iterable[ExponentVector],
        m: int,
        ordering: Optional[MonomialOrdering] = None,
    ) -> DistinguishedResult:
        """
        Run the filtration on a support.

        The support is used as given; callers wanting the minimal denominator
        go through normalize_denominator first.

        Args:
            exponents: The support Delta (numerators over m)
            m: Common denominator
            ordering: Overrides the engine's ordering for this call

        Returns:
            Selected exponents in selection order, the gcd chain and the degree

        Raises:
            DomainError: If the support is empty
            ArgumentError: If m < 1
        """
        ordering = ordering or self.ordering
        if m < 1:
            raise ArgumentError(f"denominator must be positive, got {m}")
        remaining = set(_as_vectors(exponents))
        if not remaining:
            raise DomainError("distinguished exponents of an empty support")
        r = _rank_of(list(remaining))

        matrix = IntMatrix.scaled_identity(m, r)
        current = gcd_minors(matrix, r)
        if current != m ** r:
            raise ArithmeticError(f"(r)gcd(m*I_r) = {current}, expected {m ** r}")
        chain = [current]
        pairs: List[ExponentVector] = []

        while True:
            remaining = {
                v for v in remaining
                if gcd_minors(matrix.append_column(v), r) != current
            }
            if not remaining:
                break
            chosen = ordering.minimum(remaining)
            matrix = matrix.append_column(chosen)
            current = gcd_minors(matrix, r)
            logger.debug("selected %s under %s, (r)gcd drops to %d", chosen, ordering.kind, current)
            pairs.append(chosen)
            chain.append(current)

        result = DistinguishedResult(
            r=r,
            m=m,
            pairs=tuple(pairs),
            matrices_gcds=tuple(chain),
            degree=m ** r // current,
        )
        logger.info("m=%d r=%d: %d distinguished exponents, degree %d", m, r, len(pairs), result.degree)
        return result

    def compute_series(
        self,
        series: PuiseuxSeries,
        ordering: Optional[MonomialOrdering] = None,
        normalize: bool = True,
    ) -> DistinguishedResult:
        """Run the filtration on the support of a series, by default over its minimal denominator."""
        if normalize:
            series = normalize_denominator(series)
        return self.compute(support(series), series.m, ordering)


def distinguished_exponents(
    exponents: Iterable[ExponentVector],
    m: int,
    ordering: Optional[MonomialOrdering] = None,
) -> DistinguishedResult:
    """Convenience function around DistinguishedEngine.compute."""
    return DistinguishedEngine(ordering).compute(exponents, m)
