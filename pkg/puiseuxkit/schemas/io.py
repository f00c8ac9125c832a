"""
Output documents of the command-line interface.
"""
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, field_serializer

# JSON consumers commonly read numbers as 64-bit; larger ones go out as strings
_INT64_MAX = 2 ** 63 - 1

WideInt = Union[int, str]


def wide(value: int) -> WideInt:
    """An int, or its decimal string when it does not fit in 64 bits."""
    return value if -_INT64_MAX - 1 <= value <= _INT64_MAX else str(value)


class Report(BaseModel):
    """Base for every JSON document written to stdout."""

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class OracleReport(BaseModel):
    """Brute-force cross-checks of a distinguished run."""
    span_order: WideInt
    stabilizer_order: WideInt
    conjugates: WideInt
    corollary: bool


class DistinguishedReport(Report):
    """Result of the distinguished subcommand; m, pairs, gcd_chain and degree are always present."""
    m: WideInt
    pairs: List[List[WideInt]]
    gcd_chain: List[WideInt]
    degree: WideInt
    oracle: Optional[OracleReport] = None


class PairsReport(Report):
    """Characteristic and Puiseux pairs of a plane branch."""
    m: WideInt
    betas: List[WideInt]
    pairs: List[List[WideInt]]


class QuasiOrdinaryJson(Report):
    """Characteristic monomials with their minimality and irredundancy flags."""
    m: WideInt
    order: str
    pairs: List[List[WideInt]]
    degree: WideInt
    minimal: List[bool]
    irredundant: List[bool]


class DegreeReport(Report):
    """Extension degree and the cyclic orders of its Galois group."""
    m: WideInt
    degree: WideInt
    galois_group: List[WideInt]


class NormalizeReport(Report):
    """A series rewritten over its minimal denominator."""
    m: WideInt
    series: str


class RootReport(Report):
    """Truncated n-th root keyed by T-exponent; extension is set when a root of the leading coefficient was adjoined."""
    lambda0: WideInt
    terms: Dict[str, str]
    verified_order: WideInt
    extension: Optional[str] = None


class ErrorReport(Report):
    """Failure document written to stderr under --json."""
    error: str
    kind: str
    position: Optional[int] = None

    @field_serializer("error")
    def _single_line(self, error: str) -> str:
        return " ".join(error.split())
