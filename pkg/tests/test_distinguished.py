"""
Tests for the distinguished-exponent engine.
"""
from fractions import Fraction

import pytest

from puiseuxkit.engines.distinguished import (
    DistinguishedEngine,
    distinguished_exponents,
    extension_degree,
    galois_group_structure,
    is_distinguished_set,
    normalize_denominator,
    verify_corollary,
)
from puiseuxkit.errors import ArgumentError, DomainError
from puiseuxkit.schemas.domain import PuiseuxSeries
from puiseuxkit.tools.lattice.subgroups import span, stabilizer
from puiseuxkit.tools.services.ordering import MonomialOrdering
from puiseuxkit.tools.services.series import support
from puiseuxkit.utils.samplers import make_rng, random_series, residue_supports

ORDERINGS = [MonomialOrdering(kind) for kind in ("lex", "grlex", "grevlex")]


class TestDistinguishedEngine:
    """Test cases for DistinguishedEngine.compute."""

    def setup_method(self):
        """Set up an engine with the natural order."""
        self.engine = DistinguishedEngine(MonomialOrdering("lex"))

    def test_plane_branch(self):
        """Test T^(2/4) + T^(3/4)."""
        result = self.engine.compute([(2,), (3,)], 4)
        assert result.pairs == ((2,), (3,))
        assert result.matrices_gcds == (4, 2, 1)
        assert result.degree == 4

    def test_integral_exponents(self):
        """Test m=1 selects nothing."""
        result = self.engine.compute([(5,)], 1)
        assert result.pairs == ()
        assert result.matrices_gcds == (1,)
        assert result.degree == 1

    def test_two_variables(self):
        """Test the integral exponent (2,0) is filtered out at the first step."""
        result = self.engine.compute([(1, 1), (2, 0), (1, 0)], 2)
        assert result.pairs == ((1, 0), (1, 1))
        assert result.matrices_gcds == (4, 2, 1)
        assert result.degree == 4

    def test_ordering_changes_selection(self):
        """Test lex and grlex select in different order but reach the same degree."""
        exponents = [(0, 3), (1, 0)]
        by_lex = self.engine.compute(exponents, 2)
        by_grlex = self.engine.compute(exponents, 2, MonomialOrdering("grlex"))
        assert by_lex.pairs == ((0, 3), (1, 0))
        assert by_grlex.pairs == ((1, 0), (0, 3))
        assert by_lex.degree == by_grlex.degree == 4

    def test_empty_support(self):
        """Test DomainError on an empty support."""
        with pytest.raises(DomainError):
            self.engine.compute([], 4)

    def test_bad_denominator(self):
        """Test ArgumentError for m < 1."""
        with pytest.raises(ArgumentError):
            self.engine.compute([(1,)], 0)

    def test_negative_entry(self):
        """Test ArgumentError for an exponent vector with a negative entry."""
        with pytest.raises(ArgumentError, match="negative"):
            self.engine.compute([(1, 0), (2, -1)], 2)
        with pytest.raises(ArgumentError, match="negative"):
            extension_degree([(-1,)], 4)

    def test_compute_series_normalizes(self):
        """Test the series entry point reduces the denominator first."""
        series = PuiseuxSeries(r=1, m=8, coefficients={(4,): Fraction(1), (6,): Fraction(3)})
        result = self.engine.compute_series(series)
        assert result.m == 4
        assert result.pairs == ((2,), (3,))
        raw = self.engine.compute_series(series, normalize=False)
        assert raw.m == 8
        assert raw.degree == 4

    def test_convenience_function(self):
        """Test distinguished_exponents matches the engine."""
        assert distinguished_exponents([(2,), (3,)], 4, MonomialOrdering("lex")).pairs == ((2,), (3,))

    def test_strict_descent_on_random_series(self):
        """Test the gcd chain strictly decreases by divisors on 1000 random series."""
        rng = make_rng(11)
        for _ in range(1000):
            series = random_series(rng, max_r=3, max_m=24, max_terms=8)
            result = self.engine.compute(support(series), series.m, ORDERINGS[int(rng.integers(0, 3))])
            chain = result.matrices_gcds
            assert chain[0] == series.m ** series.r
            for previous, current in zip(chain, chain[1:]):
                assert current < previous
                assert previous % current == 0
            assert result.degree * chain[-1] == series.m ** series.r

    def test_prefix_growth(self):
        """Test each selected exponent enlarges the span of the prefix."""
        rng = make_rng(5)
        for _ in range(100):
            series = random_series(rng, max_r=2, max_m=12, max_terms=6)
            result = self.engine.compute(support(series), series.m)
            orders = [span(result.pairs[:k], series.m, series.r).order for k in range(len(result.pairs) + 1)]
            assert all(a < b for a, b in zip(orders, orders[1:]))

    def test_input_order_does_not_matter(self):
        """Test the result depends on the set, not on how it is listed."""
        vectors = [(3, 1), (1, 2), (2, 2), (5, 0)]
        first = self.engine.compute(vectors, 6)
        second = self.engine.compute(list(reversed(vectors)), 6)
        assert first == second


class TestSupportSweep:
    """Exhaustive sweep over small residue supports."""

    def test_span_degree_and_ordering_invariance(self):
        """Test span(P) = span(Delta), degree = m^r / |stabilizer|, and invariance across orderings."""
        engine = DistinguishedEngine()
        mismatches = []
        for m in (2, 3, 4, 6):
            for r in (1, 2):
                for exponents in residue_supports(m, r, 3):
                    full = span(exponents, m).elements
                    expected_degree = m ** r // stabilizer(exponents, m).order
                    for ordering in ORDERINGS:
                        result = engine.compute(exponents, m, ordering)
                        ok = (
                            span(result.pairs, m, r).elements == full
                            and result.degree == expected_degree
                            and extension_degree(result.pairs, m, r) == expected_degree
                            and verify_corollary(exponents, result.pairs, m, r)
                        )
                        if not ok:
                            mismatches.append((m, r, exponents, ordering.kind))
        assert mismatches == []


class TestDegreeHelpers:
    """Test cases for extension_degree, verify_corollary and related helpers."""

    def test_extension_degree(self):
        """Test the degree formula on small cases."""
        assert extension_degree([], 5) == 1
        assert extension_degree([(1, 1)], 2) == 2
        assert extension_degree([(2,), (3,)], 4, r=1) == 4
        assert extension_degree([(1, 0), (0, 1)], 3) == 9

    def test_verify_corollary(self):
        """Test every exponent lies in the span of P."""
        assert verify_corollary([(2,), (3,)], [(2,), (3,)], 4)
        assert verify_corollary([(1, 1), (2, 0), (1, 0)], [(1, 0), (1, 1)], 2)
        assert not verify_corollary([(1, 1), (1, 0)], [(1, 1)], 2)

    def test_is_distinguished_set(self):
        """Test the defining property through stabilizers."""
        exponents = [(1, 1), (2, 0), (1, 0)]
        assert is_distinguished_set(exponents, [(1, 0), (1, 1)], 2)
        assert not is_distinguished_set(exponents, [(1, 0)], 2)
        assert not is_distinguished_set(exponents, [(0, 1), (1, 0)], 2)

    def test_galois_group_structure(self):
        """Test the cyclic decomposition and that its product is the degree."""
        assert galois_group_structure([(1, 1)], 2) == (2,)
        assert galois_group_structure([(2,), (3,)], 4) == (4,)
        assert galois_group_structure([(1, 0), (0, 1)], 2) == (2, 2)
        assert galois_group_structure([(2, 0), (0, 1)], 4) == (2, 4)
        assert galois_group_structure([], 4) == ()

    def test_group_product_is_degree(self):
        """Test prod of cyclic orders = degree on small supports."""
        for m in (2, 4, 6):
            for exponents in residue_supports(m, 2, 2):
                orders = galois_group_structure(exponents, m)
                total = 1
                for c in orders:
                    total *= c
                assert total == extension_degree(exponents, m)


class TestNormalizeDenominator:
    """Test cases for normalize_denominator."""

    def test_common_factor(self):
        """Test m=4, {2} becomes m=2, {1}."""
        series = PuiseuxSeries(r=1, m=4, coefficients={(2,): Fraction(3)})
        result = normalize_denominator(series)
        assert result.m == 2
        assert result.coefficients == {(1,): Fraction(3)}

    def test_already_minimal(self):
        """Test gcd(4,2,3) = 1 leaves the series unchanged."""
        series = PuiseuxSeries(r=1, m=4, coefficients={(2,): Fraction(1), (3,): Fraction(1)})
        assert normalize_denominator(series) == series

    def test_two_variables(self):
        """Test m=6, {(2,4),(4,2)} becomes m=3, {(1,2),(2,1)}."""
        series = PuiseuxSeries(r=2, m=6, coefficients={(2, 4): Fraction(1), (4, 2): Fraction(1)})
        result = normalize_denominator(series)
        assert result.m == 3
        assert support(result) == {(1, 2), (2, 1)}

    def test_zero_series(self):
        """Test DomainError on the zero series."""
        with pytest.raises(DomainError):
            normalize_denominator(PuiseuxSeries(r=1, m=4))
