"""
Tests for Puiseux characteristics, pairs and quasi-ordinary monomials.
"""
from fractions import Fraction

import pytest

from puiseuxkit.config import reset_settings
from puiseuxkit.engines.classical import ClassicalInvariants
from puiseuxkit.errors import ArgumentError, DomainError, IncompleteCharacteristicError
from puiseuxkit.schemas.domain import BranchCharacteristic, PuiseuxPair, PuiseuxSeries
from puiseuxkit.tools.services.ordering import MonomialOrdering
from puiseuxkit.tools.services.series import support, support_series
from puiseuxkit.utils.samplers import discardable_exponents, make_rng, random_characteristic, residue_supports


def _branch(m, *numerators):
    return PuiseuxSeries(r=1, m=m, coefficients={(n,): Fraction(1) for n in numerators})


class TestCharacteristic:
    """Test cases for characteristic_of_branch and puiseux_pairs."""

    def setup_method(self):
        """Set up the invariants service."""
        self.classical = ClassicalInvariants()

    def test_two_pairs(self):
        """Test T^(2/4) + T^(3/4)."""
        characteristic = self.classical.characteristic_of_branch(_branch(4, 2, 3))
        assert characteristic.betas == (2, 3)
        assert characteristic.e_chain == (2, 1)
        pairs = self.classical.puiseux_pairs(characteristic)
        assert [(p.p, p.q) for p in pairs] == [(1, 2), (3, 2)]
        assert " ".join(str(p) for p in pairs) == "(1,2) (3,2)"

    def test_single_pair(self):
        """Test T^(3/2)."""
        characteristic = self.classical.characteristic_of_branch(_branch(2, 3))
        assert characteristic.betas == (3,)
        assert characteristic.e_chain == (1,)
        assert self.classical.puiseux_pairs(characteristic) == [PuiseuxPair(p=3, q=2)]

    def test_integral_branch(self):
        """Test T^5 has no characteristic exponents."""
        characteristic = self.classical.characteristic_of_branch(_branch(1, 5))
        assert characteristic.m == 1
        assert characteristic.betas == ()
        assert self.classical.puiseux_pairs(characteristic) == []

    def test_normalization_first(self):
        """Test T^(16/8) + T^(12/8) is read over m=2."""
        series = PuiseuxSeries(r=1, m=8, coefficients={(16,): Fraction(1), (12,): Fraction(1)})
        characteristic = self.classical.characteristic_of_branch(series)
        assert characteristic.m == 2
        assert characteristic.betas == (3,)

    def test_pairs_from_characteristic(self):
        """Test the fixed cases m=4,(2,3) and m=6,(4,9)."""
        four = BranchCharacteristic(m=4, betas=(2, 3), e_chain=(2, 1))
        six = BranchCharacteristic(m=6, betas=(4, 9), e_chain=(2, 1))
        assert [(p.p, p.q) for p in self.classical.puiseux_pairs(four)] == [(1, 2), (3, 2)]
        assert [(p.p, p.q) for p in self.classical.puiseux_pairs(six)] == [(2, 3), (9, 2)]

    def test_characteristic_from_pairs(self):
        """Test the inverse direction."""
        characteristic = self.classical.characteristic_from_pairs([PuiseuxPair(p=2, q=3), PuiseuxPair(p=9, q=2)])
        assert characteristic == BranchCharacteristic(m=6, betas=(4, 9), e_chain=(2, 1))
        assert self.classical.characteristic_from_pairs([]) == BranchCharacteristic(m=1)

    def test_incomplete_characteristic(self):
        """Test IncompleteCharacteristicError when e_g != 1."""
        with pytest.raises(IncompleteCharacteristicError, match="does not end in 1"):
            self.classical.puiseux_pairs(BranchCharacteristic(m=4, betas=(2,), e_chain=(2,)))

    def test_more_than_one_variable(self):
        """Test DomainError for r != 1."""
        series = PuiseuxSeries(r=2, m=2, coefficients={(1, 1): Fraction(1)})
        with pytest.raises(DomainError):
            self.classical.characteristic_of_branch(series)

    def test_zero_branch(self):
        """Test DomainError for the zero series."""
        with pytest.raises(DomainError):
            self.classical.characteristic_of_branch(PuiseuxSeries(r=1, m=2))

    def test_round_trip(self):
        """Test synthesize -> recover on 250 random characteristics with discardable terms."""
        rng = make_rng(31)
        for _ in range(250):
            characteristic = random_characteristic(rng, max_m=60)
            assert characteristic.betas[0] > characteristic.m
            extras = {
                exponent: Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 5)))
                for exponent in discardable_exponents(rng, characteristic, count=4)
            }
            series = self.classical.synthesize_branch(characteristic, extras)
            recovered = self.classical.characteristic_of_branch(series)
            assert recovered == characteristic
            pairs = self.classical.puiseux_pairs(recovered)
            assert self.classical.characteristic_from_pairs(pairs) == characteristic

    def test_synthesize_rejects_characteristic_changes(self):
        """Test an exponent that would add a characteristic term is refused."""
        characteristic = BranchCharacteristic(m=4, betas=(2, 3), e_chain=(2, 1))
        with pytest.raises(ArgumentError, match="would change"):
            self.classical.synthesize_branch(characteristic, {1: Fraction(1)})
        series = self.classical.synthesize_branch(characteristic, {4: Fraction(2), 5: Fraction(-1), 6: Fraction(0)})
        assert support(series) == {(2,), (3,), (4,), (5,)}


class TestQuasiOrdinary:
    """Test cases for quasi_ordinary_monomials."""

    def setup_method(self):
        """Set up the invariants service and a graded ordering."""
        self.classical = ClassicalInvariants()
        self.grlex = MonomialOrdering("grlex")

    def test_two_monomials(self):
        """Test X1^(1/2)X2^(1/2) + X1^(3/2)X2."""
        series = PuiseuxSeries(r=2, m=2, coefficients={(1, 1): Fraction(1), (3, 2): Fraction(1)})
        report = self.classical.quasi_ordinary_monomials(series, self.grlex)
        assert report.result.pairs == ((1, 1), (3, 2))
        assert report.result.degree == 4
        assert report.irredundant == (True, True)
        assert report.minimal == (True, False)

    def test_single_monomial(self):
        """Test X1^(1/2)."""
        series = PuiseuxSeries(r=2, m=2, coefficients={(1, 0): Fraction(1)})
        report = self.classical.quasi_ordinary_monomials(series, self.grlex)
        assert report.result.pairs == ((1, 0),)
        assert report.result.degree == 2

    def test_integral(self):
        """Test X1*X2 has no characteristic monomials."""
        series = PuiseuxSeries(r=2, m=1, coefficients={(1, 1): Fraction(1)})
        report = self.classical.quasi_ordinary_monomials(series, MonomialOrdering("grevlex"))
        assert report.result.pairs == ()
        assert report.result.degree == 1
        assert report.minimal == () and report.irredundant == ()

    def test_integral_exponent_below_a_selected_one(self):
        """Test X2 + X1^(1/2)X2: (0,2) is filtered out but makes (1,2) non-minimal."""
        series = support_series([(0, 2), (1, 2)], 2)
        report = self.classical.quasi_ordinary_monomials(series, self.grlex)
        assert report.result.pairs == ((1, 2),)
        assert report.minimal == (False,)
        assert report.irredundant == (True,)

    def test_antichain_supports_are_minimal(self):
        """Test every distinguished exponent is minimal when the support is pairwise incomparable."""
        for m in (2, 3, 4):
            for vectors in residue_supports(m, 2, 3):
                comparable = any(
                    a != b and all(x <= y for x, y in zip(a, b))
                    for a in vectors for b in vectors
                )
                if comparable:
                    continue
                report = self.classical.quasi_ordinary_monomials(support_series(vectors, m, 2), self.grlex)
                assert all(report.minimal), (m, vectors)

    def test_no_enumeration_above_group_limit(self, monkeypatch):
        """Test m^r beyond PUISEUX_MAX_GROUP_ORDER still gets irredundancy flags."""
        monkeypatch.setenv("PUISEUX_MAX_GROUP_ORDER", "100")
        reset_settings()
        try:
            series = support_series([(1, 1), (2, 0)], 1001)
            report = self.classical.quasi_ordinary_monomials(series, self.grlex)
        finally:
            monkeypatch.delenv("PUISEUX_MAX_GROUP_ORDER")
            reset_settings()
        assert report.result.pairs == ((1, 1), (2, 0))
        assert report.result.degree == 1001 ** 2
        assert report.irredundant == (True, True)
        assert report.minimal == (True, True)

    def test_lex_rejected(self):
        """Test ArgumentError for a non-graded ordering."""
        series = PuiseuxSeries(r=2, m=2, coefficients={(1, 0): Fraction(1)})
        with pytest.raises(ArgumentError, match="graded"):
            self.classical.quasi_ordinary_monomials(series, MonomialOrdering("lex"))
