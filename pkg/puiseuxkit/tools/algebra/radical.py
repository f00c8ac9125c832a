"""
Exact arithmetic in Q[y]/(y^n - a).

y stands for a chosen n-th root of the nonzero rational a. When a has a
rational n-th root c the ring degenerates to Q[y]/(y - c) = Q.
"""
from fractions import Fraction
from typing import Optional, Union

from sympy import Poly, QQ, Rational, Symbol, integer_nthroot
from sympy.polys.polyerrors import NotInvertible

from ...errors import ArgumentError, ExtensionError

Y = Symbol("y")

Scalar = Union[int, Fraction]


def _to_rational(value: Scalar) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _to_fraction(value) -> Fraction:
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def exact_rational_root(a: Scalar, n: int) -> Optional[Fraction]:
    """
    Exact n-th root of a rational number.

    Args:
        a: Rational radicand
        n: Root exponent (>= 1)

    Returns:
        The real rational root, or None when it is irrational (or a < 0 with n even)
    """
    if n < 1:
        raise ArgumentError(f"root exponent must be positive, got {n}")
    a = Fraction(a)
    if a == 0:
        return Fraction(0)
    if a < 0 and n % 2 == 0:
        return None
    num, num_exact = integer_nthroot(abs(a.numerator), n)
    den, den_exact = integer_nthroot(a.denominator, n)
    if not (num_exact and den_exact):
        return None
    sign = -1 if a < 0 else 1
    return Fraction(sign * int(num), int(den))


class RadicalExtension:
    """The ring Q[y]/(y^n - a) for a fixed nonzero rational a."""

    def __init__(self, n: int, a: Scalar):
        if n < 1:
            raise ArgumentError(f"extension degree must be positive, got {n}")
        a = Fraction(a)
        if a == 0:
            raise ArgumentError("cannot adjoin a root of 0")
        self.n = n
        self.a = a
        self.modulus = Poly(Y ** n - _to_rational(a), Y, domain=QQ)

    @property
    def is_rational(self) -> bool:
        """True when the ring is just Q (y is the rational a)."""
        return self.n == 1

    def element(self, poly: Poly) -> "ExtScalar":
        return ExtScalar(self, poly)

    def from_rational(self, value: Scalar) -> "ExtScalar":
        return ExtScalar(self, Poly(_to_rational(value), Y, domain=QQ))

    def generator(self) -> "ExtScalar":
        """The class of y, an n-th root of a."""
        return ExtScalar(self, Poly(Y, Y, domain=QQ))

    def zero(self) -> "ExtScalar":
        return self.from_rational(0)

    def one(self) -> "ExtScalar":
        return self.from_rational(1)

    def relation(self) -> str:
        if self.is_rational:
            return f"y = {self.a}"
        return f"y^{self.n} = {self.a}"

    def __eq__(self, other) -> bool:
        return isinstance(other, RadicalExtension) and (self.n, self.a) == (other.n, other.a)

    def __hash__(self) -> int:
        return hash((self.n, self.a))

    def __repr__(self) -> str:
        return f"RadicalExtension(n={self.n}, a={self.a})"


class ExtScalar:
    """Residue class of a rational polynomial in y modulo y^n - a."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: RadicalExtension, poly: Poly):
        self.ring = ring
        self.poly = poly.rem(ring.modulus)

    def _coerce(self, other) -> "ExtScalar":
        if isinstance(other, ExtScalar):
            if other.ring != self.ring:
                raise ExtensionError(f"cannot combine elements of {self.ring!r} and {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.from_rational(other)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtScalar(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self) -> "ExtScalar":
        return ExtScalar(self.ring, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtScalar(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtScalar(self.ring, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExtScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "ExtScalar":
        """Multiplicative inverse; ExtensionError when none exists."""
        if self.is_zero:
            raise ExtensionError("division by zero in radical extension")
        try:
            return ExtScalar(self.ring, self.poly.invert(self.ring.modulus))
        except NotInvertible as exc:
            raise ExtensionError(
                f"{self} is not invertible modulo {self.ring.modulus.as_expr()}"
            ) from exc

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.ring.from_rational(other) * self.inverse()

    def to_rational(self) -> Optional[Fraction]:
        """The value as a Fraction when it does not involve y."""
        if self.is_zero:
            return Fraction(0)
        if self.poly.degree() > 0:
            return None
        return _to_fraction(self.poly.as_expr())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.to_rational() == other
        if not isinstance(other, ExtScalar) or other.ring != self.ring:
            return False
        return (self.poly - other.poly).is_zero

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.poly.all_coeffs())))

    def __str__(self) -> str:
        value = self.to_rational()
        if value is not None:
            return str(value)
        return str(self.poly.as_expr())

    def __repr__(self) -> str:
        return f"ExtScalar({self}, {self.ring.relation()})"
