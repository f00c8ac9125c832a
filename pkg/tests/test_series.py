"""
Tests for the series model and term-level operations.
"""
from fractions import Fraction

import pytest
from pydantic import ValidationError

from puiseuxkit.errors import ArgumentError, DimensionError
from puiseuxkit.schemas.domain import PuiseuxSeries
from puiseuxkit.tools.services.series import add_monomial, support, support_series


class TestPuiseuxSeries:
    """Test cases for PuiseuxSeries and its helpers."""

    def setup_method(self):
        """Set up X1^(3/2) + X1*X2 over m=2."""
        self.series = PuiseuxSeries(
            r=2,
            m=2,
            coefficients={(3, 0): Fraction(1), (2, 2): Fraction(1)},
        )

    def test_support(self):
        """Test support read-off."""
        assert support(self.series) == {(3, 0), (2, 2)}
        assert support(PuiseuxSeries(r=1, m=4, coefficients={(2,): Fraction(1), (3,): Fraction(-2)})) == {(2,), (3,)}

    def test_zero_series(self):
        """Test the empty map is the zero series."""
        zero = PuiseuxSeries(r=3)
        assert zero.is_zero
        assert support(zero) == frozenset()

    def test_add_monomial_new_term(self):
        """Test adding a term with a new exponent."""
        result = add_monomial(self.series, (1, 1), Fraction(1, 2))
        assert result.coefficients[(1, 1)] == Fraction(1, 2)
        assert len(result.coefficients) == 3
        # original untouched
        assert (1, 1) not in self.series.coefficients

    def test_add_monomial_cancellation(self):
        """Test a cancelled term leaves the support."""
        result = add_monomial(self.series, (3, 0), -1)
        assert support(result) == {(2, 2)}

    def test_add_monomial_dimension(self):
        """Test DimensionError for a wrong-length exponent."""
        with pytest.raises(DimensionError):
            add_monomial(self.series, (1,), 1)

    def test_support_series(self):
        """Test the coefficient-free constructor."""
        series = support_series([(2,), (3,)], 4)
        assert series.r == 1 and series.m == 4
        assert set(series.coefficients.values()) == {Fraction(1)}
        assert support_series([], 2, r=2).is_zero

    def test_support_series_needs_rank(self):
        """Test an empty support without r is rejected."""
        with pytest.raises(ArgumentError):
            support_series([], 2)
        with pytest.raises(DimensionError):
            support_series([(1,), (1, 2)], 2)

    def test_validation(self):
        """Test model invariants."""
        with pytest.raises(ValidationError, match="negative"):
            PuiseuxSeries(r=1, m=2, coefficients={(-1,): Fraction(1)})
        with pytest.raises(ValidationError, match="zero coefficient"):
            PuiseuxSeries(r=1, m=2, coefficients={(1,): Fraction(0)})
        with pytest.raises(ValidationError, match="length"):
            PuiseuxSeries(r=2, m=2, coefficients={(1,): Fraction(1)})
        with pytest.raises(ValidationError):
            PuiseuxSeries(r=1, m=0)
