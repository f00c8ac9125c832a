"""
Classical invariants read off from distinguished exponents.

For a plane branch the distinguished exponents under the natural order are
Zariski's characteristic exponents beta_1 < ... < beta_g; for a quasi-ordinary
branch a graded order yields the characteristic monomials.
"""
import logging
from fractions import Fraction
from math import gcd, prod
from typing import Dict, List, Optional, Sequence

from ..errors import ArgumentError, DomainError, IncompleteCharacteristicError
from ..schemas.domain import (
    BranchCharacteristic,
    PuiseuxPair,
    PuiseuxSeries,
    QuasiOrdinaryReport,
)
from ..tools.services.ordering import MonomialOrdering
from ..tools.services.series import support
from .distinguished import DistinguishedEngine, extension_degree, normalize_denominator

logger = logging.getLogger(__name__)


def _e_chain(m: int, betas: Sequence[int]) -> tuple:
    chain = []
    e = m
    for beta in betas:
        e = gcd(e, beta)
        chain.append(e)
    return tuple(chain)


class ClassicalInvariants:
    """Puiseux characteristic, Puiseux pairs and quasi-ordinary characteristic monomials."""

    def __init__(self, engine: Optional[DistinguishedEngine] = None):
        self.engine = engine or DistinguishedEngine()
        # the natural order on N
        self.natural_order = MonomialOrdering("lex")

    def characteristic_of_branch(self, series: PuiseuxSeries, normalize: bool = True) -> BranchCharacteristic:
        """
        Characteristic {m, beta_1, ..., beta_g} of a univariate branch.

        Args:
            series: Nonzero series in one variable
            normalize: Rewrite over the minimal denominator first

        Returns:
            BranchCharacteristic; empty betas when every exponent is integral

        Raises:
            DomainError: For a zero series or more than one variable
        """
        if series.r != 1:
            raise DomainError(f"a plane branch is a series in one variable, got r={series.r}")
        if normalize:
            series = normalize_denominator(series)
        elif series.is_zero:
            raise DomainError("the zero series has no characteristic")
        if series.m == 1:
            return BranchCharacteristic(m=1)

        result = self.engine.compute(support(series), series.m, self.natural_order)
        betas = tuple(pair[0] for pair in result.pairs)
        if any(b >= c for b, c in zip(betas, betas[1:])):
            raise ArithmeticError(f"characteristic exponents came out unordered: {betas}")
        return BranchCharacteristic(m=series.m, betas=betas, e_chain=_e_chain(series.m, betas))

    def puiseux_pairs(self, characteristic: BranchCharacteristic) -> List[PuiseuxPair]:
        """
        Puiseux pairs from beta_l = p_l e_l and e_(l-1) = q_l e_l (with e_0 = m).

        Raises:
            IncompleteCharacteristicError: If e_g != 1
        """
        if not characteristic.is_complete:
            raise IncompleteCharacteristicError(
                f"gcd chain {characteristic.e_chain} of m={characteristic.m} does not end in 1; "
                "is m the minimal denominator?"
            )
        pairs = []
        previous = characteristic.m
        for beta, e in zip(characteristic.betas, characteristic.e_chain):
            pairs.append(PuiseuxPair(p=beta // e, q=previous // e))
            previous = e
        return pairs

    def characteristic_from_pairs(self, pairs: Sequence[PuiseuxPair]) -> BranchCharacteristic:
        """Inverse of puiseux_pairs: m = q_1...q_g, e_l = q_(l+1)...q_g, beta_l = p_l e_l."""
        qs = [pair.q for pair in pairs]
        m = prod(qs)
        betas = tuple(pair.p * prod(qs[index + 1:]) for index, pair in enumerate(pairs))
        return BranchCharacteristic(m=m, betas=betas, e_chain=_e_chain(m, betas))

    def synthesize_branch(
        self,
        characteristic: BranchCharacteristic,
        extras: Optional[Dict[int, Fraction]] = None,
    ) -> PuiseuxSeries:
        """
        A branch with the given characteristic plus discardable terms.

        Args:
            characteristic: Target characteristic
            extras: Exponent numerator -> coefficient; each must be a multiple
                of m or of the form beta_t + k e_t with k >= 1

        Returns:
            Univariate series over m
        """
        coefficients = {(beta,): Fraction(1) for beta in characteristic.betas}
        for exponent, coefficient in (extras or {}).items():
            discardable = exponent % characteristic.m == 0 or any(
                exponent > beta and exponent % e == 0
                for beta, e in zip(characteristic.betas, characteristic.e_chain)
            )
            if exponent < 0 or not discardable:
                raise ArgumentError(f"exponent {exponent} would change the characteristic")
            if (exponent,) in coefficients:
                continue
            if coefficient != 0:
                coefficients[(exponent,)] = Fraction(coefficient)
        return PuiseuxSeries(r=1, m=characteristic.m, coefficients=coefficients)

    def quasi_ordinary_monomials(
        self,
        series: PuiseuxSeries,
        ordering: MonomialOrdering,
        normalize: bool = True,
    ) -> QuasiOrdinaryReport:
        """
        Characteristic monomials under a graded ordering, with two reports.

        For each distinguished exponent: (a) whether it is minimal in the support
        for the componentwise partial order, (b) whether dropping it lowers the
        degree of K[P] over K.

        Raises:
            ArgumentError: If the ordering is not graded
        """
        if not ordering.is_graded:
            raise ArgumentError(f"quasi-ordinary monomials need a graded ordering, got {ordering.kind}")
        result = self.engine.compute_series(series, ordering, normalize=normalize)
        exponents = support(normalize_denominator(series) if normalize else series)

        minimal = tuple(
            not any(w != p and all(x <= y for x, y in zip(w, p)) for w in exponents)
            for p in result.pairs
        )
        irredundant = tuple(
            extension_degree(result.pairs[:i] + result.pairs[i + 1:], result.m, result.r) < result.degree
            for i in range(len(result.pairs))
        )
        logger.debug("quasi-ordinary report: minimal=%s irredundant=%s", minimal, irredundant)
        return QuasiOrdinaryReport(result=result, minimal=minimal, irredundant=irredundant)
