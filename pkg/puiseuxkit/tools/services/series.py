"""
Support and term-level operations on sparse Puiseux series.
"""
from fractions import Fraction
from typing import FrozenSet, Iterable, Optional, Union

from ...errors import ArgumentError, DimensionError
from ...schemas.domain import ExponentVector, PuiseuxSeries


def support(series: PuiseuxSeries) -> FrozenSet[ExponentVector]:
    """
    Return the set of exponents Delta(zeta).

    Args:
        series: Puiseux series

    Returns:
        Exponent numerators (over series.m) with nonzero coefficient
    """
    return frozenset(series.coefficients)


def add_monomial(
    series: PuiseuxSeries,
    exponent: ExponentVector,
    coefficient: Union[int, Fraction],
) -> PuiseuxSeries:
    """Return series + coefficient * X^(exponent/m); a cancelled term leaves the support."""
    exponent = tuple(int(e) for e in exponent)
    if len(exponent) != series.r:
        raise DimensionError(f"exponent {exponent} does not have {series.r} entries")
    coefficients = dict(series.coefficients)
    total = coefficients.get(exponent, Fraction(0)) + Fraction(coefficient)
    if total == 0:
        coefficients.pop(exponent, None)
    else:
        coefficients[exponent] = total
    return PuiseuxSeries(r=series.r, m=series.m, coefficients=coefficients)


def support_series(
    exponents: Iterable[ExponentVector],
    m: int,
    r: Optional[int] = None,
) -> PuiseuxSeries:
    """
    Build the series with coefficient 1 on every given exponent.

    This is the coefficient-free entry point: every engine only reads the support.
    """
    exponents = {tuple(int(e) for e in v) for v in exponents}
    if r is None:
        if not exponents:
            raise ArgumentError("variable count is required for an empty support")
        r = len(next(iter(exponents)))
    if any(len(v) != r for v in exponents):
        raise DimensionError(f"all exponents must have {r} entries")
    return PuiseuxSeries(r=r, m=m, coefficients={v: Fraction(1) for v in exponents})
