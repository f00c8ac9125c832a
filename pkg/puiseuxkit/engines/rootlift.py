"""
Truncated n-th roots of power series by iterative lifting.

With lambda_0 = nu(zeta) and a the leading coefficient, the root starts as
c T^(lambda_0 / n) with c^n = a. While nu(root^n - zeta) = lambda < target,
the initial coefficient d of root^n - zeta is cancelled by the new term
-(d / (n c^(n-1))) T^(lambda - lambda_0 + lambda_0 / n).
"""
import logging
from fractions import Fraction
from typing import Dict, Hashable, Optional, Tuple

from ..config import get_settings
from ..errors import ArgumentError, DomainError
from ..schemas.domain import PuiseuxSeries, TruncatedRoot
from ..tools.algebra.radical import ExtScalar, RadicalExtension, exact_rational_root
from .distinguished import normalize_denominator

logger = logging.getLogger(__name__)

SparseSeries = Dict[Hashable, ExtScalar]


def _multiply(f: SparseSeries, g: SparseSeries, bound) -> SparseSeries:
    """Product of two sparse series, dropping exponents >= bound."""
    product: SparseSeries = {}
    for i, a in f.items():
        for j, b in g.items():
            k = i + j
            if k >= bound:
                continue
            product[k] = product[k] + a * b if k in product else a * b
    return {k: v for k, v in product.items() if not v.is_zero}


def _power(f: SparseSeries, n: int, bound) -> SparseSeries:
    result = f
    for _ in range(n - 1):
        result = _multiply(result, f, bound)
    return result


def _subtract(f: SparseSeries, g: SparseSeries) -> SparseSeries:
    difference = dict(f)
    for k, v in g.items():
        difference[k] = difference[k] - v if k in difference else -v
    return {k: v for k, v in difference.items() if not v.is_zero}


class RootLifter:
    """Builds approximate n-th roots of univariate power series."""

    def __init__(self, prefer_rational_root: Optional[bool] = None):
        self.settings = get_settings()
        if prefer_rational_root is None:
            prefer_rational_root = self.settings.prefer_rational_root
        self.prefer_rational_root = prefer_rational_root

    def leading_root(self, a: Fraction, n: int) -> Tuple[RadicalExtension, ExtScalar]:
        """
        Ring and value of c with c^n = a.

        The exact rational root is used when it exists (and the policy allows);
        otherwise y is adjoined with y^n = a.
        """
        if self.prefer_rational_root:
            root = exact_rational_root(a, n)
            if root is not None:
                ring = RadicalExtension(1, root)
                return ring, ring.generator()
        ring = RadicalExtension(n, a)
        return ring, ring.generator()

    def _power_series_terms(self, series: PuiseuxSeries) -> Dict[int, Fraction]:
        if series.r != 1:
            raise DomainError(f"root lifting works in one variable, got r={series.r}")
        series = normalize_denominator(series)
        if series.m != 1:
            raise DomainError(f"{series.m}-th roots of T appear; expected a power series")
        return {exponent[0]: c for exponent, c in series.coefficients.items()}

    def nth_root_series(self, series: PuiseuxSeries, n: int, target_order: int) -> TruncatedRoot:
        """
        Lift an n-th root of a power series up to a target order.

        Args:
            series: Nonzero power series in T with rational coefficients
            n: Root exponent
            target_order: Order in T below which root^n must agree with the series

        Returns:
            TruncatedRoot with achieved_order >= target_order

        Raises:
            DomainError: For the zero series or a series that is not a power series
            ArgumentError: If n < 1 or target_order <= nu(series)
        """
        if n < 1:
            raise ArgumentError(f"root exponent must be positive, got {n}")
        if series.is_zero:
            raise DomainError("the zero series has no leading term to take a root of")
        coefficients = self._power_series_terms(series)
        lambda0 = min(coefficients)
        if target_order <= lambda0:
            raise ArgumentError(f"target order {target_order} must exceed nu(zeta) = {lambda0}")

        ring, c = self.leading_root(coefficients[lambda0], n)
        window = target_order - lambda0
        # zeta / T^lambda0 inside the window
        shifted = {
            e - lambda0: ring.from_rational(v)
            for e, v in coefficients.items()
            if e - lambda0 < window
        }
        scale = (c ** (n - 1) * n).inverse()

        # offsets k stand for the exponent k + lambda0 / n
        approximant: SparseSeries = {0: c}
        lambdas = [lambda0]
        while True:
            defect = _subtract(_power(approximant, n, window), shifted)
            if not defect:
                break
            j = min(defect)
            lambdas.append(lambda0 + j)
            approximant[j] = -defect[j] * scale
            logger.debug("lambda=%d: new coefficient %s", lambda0 + j, approximant[j])

        shift = Fraction(lambda0, n)
        root = TruncatedRoot(
            n=n,
            lambda0=lambda0,
            extension=ring,
            terms={Fraction(k) + shift: v for k, v in sorted(approximant.items())},
            lambdas=tuple(lambdas),
            achieved_order=target_order,
        )
        logger.info("lifted %d-th root to order %d with %d terms (%s)", n, target_order, len(root.terms), ring.relation())
        return root

    def verify_root(self, root: TruncatedRoot, series: PuiseuxSeries, order: int) -> bool:
        """
        Check nu(root^n - zeta) >= order and that root^n has integer exponents.

        Args:
            root: Approximate root
            series: Univariate series it should be a root of
            order: Exponents below this must cancel

        Returns:
            True iff both checks pass
        """
        if series.r != 1:
            raise DomainError(f"root verification works in one variable, got r={series.r}")
        shift = Fraction(root.lambda0, root.n)
        # n exponents from lambda0/n + N always add up to an integer
        for mu in root.terms:
            offset = Fraction(mu) - shift
            if offset.denominator != 1 or offset < 0:
                return False

        powered = {k: v for k, v in _power(dict(root.terms), root.n, order).items() if k < order}
        if any(Fraction(e).denominator != 1 or e < 0 for e in powered):
            return False
        target = {
            Fraction(exponent[0], series.m): root.extension.from_rational(c)
            for exponent, c in series.coefficients.items()
            if Fraction(exponent[0], series.m) < order
        }
        return not _subtract(powered, target)


def nth_root_series(series: PuiseuxSeries, n: int, target_order: int) -> TruncatedRoot:
    """Convenience function around RootLifter.nth_root_series."""
    return RootLifter().nth_root_series(series, n, target_order)


def verify_root(root: TruncatedRoot, series: PuiseuxSeries, order: int) -> bool:
    """Convenience function around RootLifter.verify_root."""
    return RootLifter().verify_root(root, series, order)
