"""
Supervisor routing CLI subcommands to the engines.
"""
import logging
from typing import Any, Callable, Dict, Optional

from .config import get_settings
from .engines.classical import ClassicalInvariants
from .engines.distinguished import (
    DistinguishedEngine,
    extension_degree,
    galois_group_structure,
    normalize_denominator,
    verify_corollary,
)
from .engines.rootlift import RootLifter
from .errors import ArgumentError, DomainError, OracleMismatchError
from .schemas.domain import DistinguishedResult, PuiseuxSeries
from .schemas.io import (
    DegreeReport,
    DistinguishedReport,
    NormalizeReport,
    OracleReport,
    PairsReport,
    QuasiOrdinaryJson,
    Report,
    RootReport,
    wide,
)
from .tools.lattice.subgroups import conjugate_count, span, stabilizer
from .tools.services.ordering import MonomialOrdering
from .tools.services.series import support
from .tools.services.series_parser import format_series

logger = logging.getLogger(__name__)


def _vectors(pairs) -> list:
    return [[wide(x) for x in v] for v in pairs]


class Supervisor:
    """Routes a subcommand and its options to the engine that answers it."""

    def __init__(self):
        self.settings = get_settings()
        self.engine = DistinguishedEngine()
        self.classical = ClassicalInvariants(self.engine)
        self.lifter = RootLifter()
        self.handlers: Dict[str, Callable[..., Report]] = {
            "distinguished": self.distinguished,
            "pairs": self.pairs,
            "qo": self.quasi_ordinary,
            "degree": self.degree,
            "root": self.root,
            "normalize": self.normalize,
        }

    def dispatch(self, command: str, series: PuiseuxSeries, **options: Any) -> Report:
        """
        Run one subcommand on a parsed series.

        Args:
            command: Subcommand name
            series: Parsed input
            **options: Subcommand options as parsed from the command line

        Returns:
            The report the CLI prints
        """
        handler = self.handlers.get(command)
        if handler is None:
            raise ArgumentError(f"unknown command {command!r}; expected one of {', '.join(self.handlers)}")
        logger.debug("dispatching %s on r=%d m=%d with %d terms", command, series.r, series.m, len(series.coefficients))
        return handler(series, **options)

    @staticmethod
    def _prepared(series: PuiseuxSeries, normalize: bool) -> PuiseuxSeries:
        if series.is_zero:
            raise DomainError("the zero series has an empty support")
        return normalize_denominator(series) if normalize else series

    def distinguished(
        self,
        series: PuiseuxSeries,
        order: Optional[str] = None,
        normalize: bool = True,
        oracle: bool = False,
    ) -> DistinguishedReport:
        series = self._prepared(series, normalize)
        exponents = support(series)
        result = self.engine.compute(exponents, series.m, MonomialOrdering(order))
        return DistinguishedReport(
            m=wide(result.m),
            pairs=_vectors(result.pairs),
            gcd_chain=[wide(g) for g in result.matrices_gcds],
            degree=wide(result.degree),
            oracle=self.check_oracle(exponents, result) if oracle else None,
        )

    def check_oracle(self, exponents, result: DistinguishedResult) -> OracleReport:
        """
        Re-derive span and degree by explicit enumeration.

        Raises:
            OracleMismatchError: On any disagreement with the filtration
        """
        m, r = result.m, result.r
        exponents = sorted(exponents)
        generated = span(result.pairs, m, r)
        full = span(exponents, m, r)
        if generated.elements != full.elements:
            raise OracleMismatchError(
                f"span of P has {generated.order} elements, span of the support has {full.order}"
            )
        fixed = stabilizer(exponents, m, r)
        if result.degree * fixed.order != m ** r:
            raise OracleMismatchError(
                f"degree {result.degree} but m^r / |stabilizer| = {m ** r // fixed.order}"
            )
        conjugates = conjugate_count(exponents, m, r)
        if conjugates != result.degree:
            raise OracleMismatchError(f"degree {result.degree} but {conjugates} distinct conjugates")
        if not verify_corollary(exponents, result.pairs, m, r):
            raise OracleMismatchError("an exponent lies outside the span of P modulo m")
        if generated.order != result.degree:
            raise OracleMismatchError(f"span of P has {generated.order} elements but degree is {result.degree}")
        logger.info("oracle agrees: degree %d, %d fixing elements", result.degree, fixed.order)
        return OracleReport(
            span_order=wide(generated.order),
            stabilizer_order=wide(fixed.order),
            conjugates=wide(conjugates),
            corollary=True,
        )

    def pairs(self, series: PuiseuxSeries, normalize: bool = True) -> PairsReport:
        characteristic = self.classical.characteristic_of_branch(series, normalize=normalize)
        pairs = self.classical.puiseux_pairs(characteristic)
        return PairsReport(
            m=wide(characteristic.m),
            betas=[wide(b) for b in characteristic.betas],
            pairs=[[wide(pair.p), wide(pair.q)] for pair in pairs],
        )

    def quasi_ordinary(
        self,
        series: PuiseuxSeries,
        order: Optional[str] = None,
        normalize: bool = True,
    ) -> QuasiOrdinaryJson:
        ordering = MonomialOrdering(order)
        report = self.classical.quasi_ordinary_monomials(self._prepared(series, False), ordering, normalize=normalize)
        return QuasiOrdinaryJson(
            m=wide(report.result.m),
            order=ordering.kind,
            pairs=_vectors(report.result.pairs),
            degree=wide(report.result.degree),
            minimal=list(report.minimal),
            irredundant=list(report.irredundant),
        )

    def degree(self, series: PuiseuxSeries, normalize: bool = True) -> DegreeReport:
        series = self._prepared(series, normalize)
        exponents = sorted(support(series))
        return DegreeReport(
            m=wide(series.m),
            degree=wide(extension_degree(exponents, series.m, series.r)),
            galois_group=[wide(c) for c in galois_group_structure(exponents, series.m, series.r)],
        )

    def root(self, series: PuiseuxSeries, n: int = 2, trunc: Optional[int] = None) -> RootReport:
        """
        n-th root of a power series, verified before it is reported.

        Raises:
            OracleMismatchError: If root^n does not agree with the series below trunc
        """
        trunc = self.settings.default_trunc if trunc is None else trunc
        root = self.lifter.nth_root_series(series, n, trunc)
        if not self.lifter.verify_root(root, series, trunc):
            raise OracleMismatchError(f"root^{n} differs from the series below T^{trunc}")
        return RootReport(
            lambda0=wide(root.lambda0),
            terms={str(mu): str(c) for mu, c in sorted(root.terms.items())},
            verified_order=wide(root.achieved_order),
            extension=None if root.extension.is_rational else root.extension.relation(),
        )

    def normalize(self, series: PuiseuxSeries) -> NormalizeReport:
        series = self._prepared(series, True)
        return NormalizeReport(m=wide(series.m), series=format_series(series))
