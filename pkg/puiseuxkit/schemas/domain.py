"""
Domain models shared by every engine.

All models are frozen: operations return new values instead of mutating.
"""
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..tools.algebra.radical import ExtScalar, RadicalExtension

# Numerators (i_1, ..., i_r) of the exponents over the shared denominator m
ExponentVector = Tuple[int, ...]


class PuiseuxSeries(BaseModel):
    """Sparse series sum c * X_1^(i_1/m) ... X_r^(i_r/m) with rational coefficients."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r: int = Field(ge=1)
    m: int = Field(default=1, ge=1)
    coefficients: Dict[ExponentVector, Fraction] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_terms(self) -> "PuiseuxSeries":
        for exponent, coefficient in self.coefficients.items():
            if len(exponent) != self.r:
                raise ValueError(f"exponent {exponent} has length {len(exponent)}, expected {self.r}")
            if any(entry < 0 for entry in exponent):
                raise ValueError(f"exponent {exponent} has a negative entry")
            if coefficient == 0:
                raise ValueError(f"zero coefficient stored for {exponent}")
        return self

    @property
    def is_zero(self) -> bool:
        return not self.coefficients


class IntMatrix(BaseModel):
    """Dense integer matrix, row-major."""
    model_config = ConfigDict(frozen=True)

    rows: int = Field(ge=1)
    cols: int = Field(ge=1)
    entries: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_shape(self) -> "IntMatrix":
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        return self

    @classmethod
    def from_rows(cls, rows: List[List[int]]) -> "IntMatrix":
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("rows of different length")
        return cls(rows=len(rows), cols=width, entries=tuple(int(x) for row in rows for x in row))

    @classmethod
    def scaled_identity(cls, m: int, r: int) -> "IntMatrix":
        """The matrix m * I_r."""
        return cls.from_rows([[m if i == j else 0 for j in range(r)] for i in range(r)])

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def append_column(self, column: ExponentVector) -> "IntMatrix":
        """Return [self | column]."""
        if len(column) != self.rows:
            raise ValueError(f"column of length {len(column)} does not fit {self.rows} rows")
        rows = self.to_rows()
        for row, value in zip(rows, column):
            row.append(int(value))
        return IntMatrix.from_rows(rows)


class ModSubgroup(BaseModel):
    """A subgroup of (Z/mZ)^r given by its full element set."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    r: int = Field(ge=1)
    elements: FrozenSet[ExponentVector]

    @model_validator(mode="after")
    def _check_elements(self) -> "ModSubgroup":
        if (0,) * self.r not in self.elements:
            raise ValueError("subgroup must contain the zero vector")
        for element in self.elements:
            if len(element) != self.r or any(not 0 <= x < self.m for x in element):
                raise ValueError(f"{element} is not a reduced vector of (Z/{self.m}Z)^{self.r}")
        if self.m ** self.r % len(self.elements):
            raise ValueError(f"order {len(self.elements)} does not divide {self.m}^{self.r}")
        return self

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, vector: ExponentVector) -> bool:
        """Membership of an unreduced vector."""
        return tuple(x % self.m for x in vector) in self.elements

    def is_closed(self) -> bool:
        """Exhaustive closure check under addition mod m."""
        return all(
            tuple((x + y) % self.m for x, y in zip(a, b)) in self.elements
            for a in self.elements
            for b in self.elements
        )


class DistinguishedResult(BaseModel):
    """A set of distinguished exponents together with its minor-gcd chain."""
    model_config = ConfigDict(frozen=True)

    r: int = Field(ge=1)
    m: int = Field(ge=1)
    pairs: Tuple[ExponentVector, ...]
    matrices_gcds: Tuple[int, ...]
    degree: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_chain(self) -> "DistinguishedResult":
        if len(self.matrices_gcds) != len(self.pairs) + 1:
            raise ValueError("gcd chain must be one longer than the list of pairs")
        for previous, current in zip(self.matrices_gcds, self.matrices_gcds[1:]):
            if current >= previous or previous % current:
                raise ValueError(f"gcd chain is not strictly divisibility-decreasing: {self.matrices_gcds}")
        if self.degree * self.matrices_gcds[-1] != self.m ** self.r:
            raise ValueError("degree must equal m^r / last gcd")
        return self


class BranchCharacteristic(BaseModel):
    """Zariski's characteristic {m, beta_1, ..., beta_g} of a plane branch."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=1)
    betas: Tuple[int, ...] = ()
    e_chain: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_recursion(self) -> "BranchCharacteristic":
        if len(self.betas) != len(self.e_chain):
            raise ValueError("betas and e_chain must have the same length")
        if any(b <= 0 for b in self.betas):
            raise ValueError("characteristic exponents must be positive")
        if any(b >= c for b, c in zip(self.betas, self.betas[1:])):
            raise ValueError(f"betas must be strictly increasing: {self.betas}")
        if any(b % self.m == 0 for b in self.betas):
            raise ValueError("a characteristic exponent cannot be a multiple of m")
        e = self.m
        for beta, recorded in zip(self.betas, self.e_chain):
            e = gcd(e, beta)
            if e != recorded:
                raise ValueError(f"e_chain {self.e_chain} does not follow the gcd recursion")
        return self

    @property
    def is_complete(self) -> bool:
        """True when the gcd chain reaches 1 (m is the minimal denominator)."""
        return (self.e_chain[-1] if self.e_chain else self.m) == 1


class PuiseuxPair(BaseModel):
    """One Puiseux pair (p, q)."""
    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=1)
    q: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_coprime(self) -> "PuiseuxPair":
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"Puiseux pair ({self.p},{self.q}) is not coprime")
        return self

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


class QuasiOrdinaryReport(BaseModel):
    """Distinguished exponents under a graded order plus the two minimality reports."""
    model_config = ConfigDict(frozen=True)

    result: DistinguishedResult
    minimal: Tuple[bool, ...]
    irredundant: Tuple[bool, ...]

    @model_validator(mode="after")
    def _check_lengths(self) -> "QuasiOrdinaryReport":
        if not len(self.minimal) == len(self.irredundant) == len(self.result.pairs):
            raise ValueError("one minimality and one irredundancy flag per distinguished exponent")
        return self


class TruncatedRoot(BaseModel):
    """Approximate n-th root sum c_mu T^mu with every mu in lambda0/n + N."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(ge=1)
    lambda0: int = Field(ge=0)
    extension: RadicalExtension
    terms: Dict[Fraction, ExtScalar] = Field(default_factory=dict)
    lambdas: Tuple[int, ...] = ()
    achieved_order: int

    @model_validator(mode="after")
    def _check_exponents(self) -> "TruncatedRoot":
        shift = Fraction(self.lambda0, self.n)
        for mu, coefficient in self.terms.items():
            offset = Fraction(mu) - shift
            if offset.denominator != 1 or offset < 0:
                raise ValueError(f"exponent {mu} is not in {shift} + N")
            if coefficient.ring != self.extension:
                raise ValueError(f"coefficient of T^{mu} lives in another ring")
        if self.lambdas:
            if self.lambdas[0] != self.lambda0:
                raise ValueError("lambda sequence must start at lambda0")
            if any(b <= a for a, b in zip(self.lambdas, self.lambdas[1:])):
                raise ValueError(f"lambda sequence must be strictly increasing: {self.lambdas}")
            if self.achieved_order <= self.lambdas[-1]:
                raise ValueError("achieved order must exceed the last recorded lambda")
        return self
