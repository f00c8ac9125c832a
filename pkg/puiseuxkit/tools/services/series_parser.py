"""
Parser and formatter for the textual series notation.

Grammar:
    series   := ['+'|'-'] term (('+'|'-') term)*
    term     := coeff? ('*'? monomial)*
    monomial := var '^' '(' frac ')' | var '^' frac | var
    frac     := int ('/' int)?
    coeff    := frac

Variables are T (one variable) or X1, X2, ... Exponent denominators are
combined into their lcm as written: T^(2/4) contributes 4, not 2.
"""
import re
from fractions import Fraction
from math import lcm
from typing import Dict, List, NamedTuple, Optional, Tuple

from ...errors import ArgumentError, DimensionError, SeriesSyntaxError, UnsupportedSeriesError
from ...schemas.domain import ExponentVector, PuiseuxSeries


class Token(NamedTuple):
    kind: str
    text: str
    position: int


# (variable index, numerator, literal denominator)
_Factor = Tuple[int, int, int]


class _TokenStream:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0
        # "T" or "X" once a variable has been read
        self.variable_kind: Optional[str] = None

    def peek(self) -> Token:
        return self.tokens[self.index]

    def at(self, kind: str, text: Optional[str] = None) -> bool:
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def next(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != "END":
            self.index += 1
        return token

    def expect(self, kind: str, text: Optional[str] = None, what: str = "") -> Token:
        if not self.at(kind, text):
            token = self.peek()
            found = "end of input" if token.kind == "END" else repr(token.text)
            raise SeriesSyntaxError(f"expected {what or text or kind}, found {found}", token.position)
        return self.next()


class SeriesParser:
    """Recursive-descent parser for Puiseux series text."""

    def __init__(self):
        self.token_patterns = {
            "NUMBER": r"\d+",
            "VAR": r"X\d+|T",
            "OP": r"[+\-*/^()]",
            "SPACE": r"\s+",
        }
        self._scanner = re.compile(
            "|".join(f"(?P<{kind}>{pattern})" for kind, pattern in self.token_patterns.items())
        )

    def tokenize(self, text: str) -> List[Token]:
        """
        Split text into tokens, dropping whitespace.

        Raises:
            SeriesSyntaxError: On a character outside the alphabet
        """
        tokens: List[Token] = []
        position = 0
        while position < len(text):
            match = self._scanner.match(text, position)
            if match is None:
                raise SeriesSyntaxError(f"unexpected character {text[position]!r}", position)
            if match.lastgroup != "SPACE":
                tokens.append(Token(match.lastgroup, match.group(), position))
            position = match.end()
        tokens.append(Token("END", "", len(text)))
        return tokens

    def parse_series(self, text: str, nvars: Optional[int] = None) -> PuiseuxSeries:
        """
        Parse series text into a PuiseuxSeries.

        Args:
            text: Series in the notation above
            nvars: Variable count; defaults to the largest index used (1 for T)

        Returns:
            Series over the lcm of the exponent denominators, like terms merged
            and zero coefficients dropped

        Raises:
            SeriesSyntaxError: If the text does not match the grammar
            UnsupportedSeriesError: For a negative exponent
            DimensionError: If nvars is smaller than a variable index used
        """
        stream = _TokenStream(self.tokenize(text or ""))
        if stream.at("END"):
            raise SeriesSyntaxError("empty series", 0)

        terms: List[Tuple[Fraction, List[_Factor]]] = []
        sign = 1
        if stream.at("OP", "+") or stream.at("OP", "-"):
            sign = -1 if stream.next().text == "-" else 1
        while True:
            coefficient, factors = self._parse_term(stream)
            terms.append((sign * coefficient, factors))
            if stream.at("END"):
                break
            operator = stream.peek()
            if not (stream.at("OP", "+") or stream.at("OP", "-")):
                raise SeriesSyntaxError(f"expected '+' or '-', found {operator.text!r}", operator.position)
            sign = -1 if stream.next().text == "-" else 1

        r = self._variable_count(terms, nvars, stream.variable_kind)
        m = lcm(1, *(q for _, factors in terms for _, _, q in factors))
        coefficients: Dict[ExponentVector, Fraction] = {}
        for coefficient, factors in terms:
            exponent = [0] * r
            for index, p, q in factors:
                exponent[index] += p * (m // q)
            key = tuple(exponent)
            coefficients[key] = coefficients.get(key, Fraction(0)) + coefficient
        return PuiseuxSeries(
            r=r,
            m=m,
            coefficients={k: c for k, c in coefficients.items() if c != 0},
        )

    def _variable_count(
        self,
        terms: List[Tuple[Fraction, List[_Factor]]],
        nvars: Optional[int],
        variable_kind: Optional[str],
    ) -> int:
        if nvars is not None and nvars < 1:
            raise ArgumentError(f"variable count must be positive, got {nvars}")
        if variable_kind == "T":
            if nvars not in (None, 1):
                raise DimensionError(f"T names the only variable, but {nvars} variables were requested")
            return 1
        used = max((index + 1 for _, factors in terms for index, _, _ in factors), default=1)
        if nvars is None:
            return used
        if nvars < used:
            raise DimensionError(f"X{used} is used but only {nvars} variables were requested")
        return nvars

    def _parse_term(self, stream: _TokenStream) -> Tuple[Fraction, List[_Factor]]:
        start = stream.peek()
        coefficient = Fraction(1)
        factors: List[_Factor] = []
        seen = False
        if stream.at("NUMBER"):
            p, q = self._parse_frac(stream)
            coefficient = Fraction(p, q)
            seen = True
        while True:
            if stream.at("OP", "*"):
                star = stream.next()
                if not seen:
                    raise SeriesSyntaxError("'*' without a left operand", star.position)
                factors.append(self._parse_monomial(stream))
            elif stream.at("VAR"):
                factors.append(self._parse_monomial(stream))
            else:
                break
            seen = True
        if not seen:
            found = "end of input" if start.kind == "END" else repr(start.text)
            raise SeriesSyntaxError(f"expected a term, found {found}", start.position)
        return coefficient, factors

    def _parse_monomial(self, stream: _TokenStream) -> _Factor:
        token = stream.expect("VAR", what="a variable")
        index = self._variable_index(token, stream)
        if not stream.at("OP", "^"):
            return index, 1, 1
        stream.next()
        if stream.at("OP", "("):
            stream.next()
            self._reject_negative(stream)
            p, q = self._parse_frac(stream)
            stream.expect("OP", ")")
        else:
            self._reject_negative(stream)
            p, q = self._parse_frac(stream)
        return index, p, q

    @staticmethod
    def _variable_index(token: Token, stream: _TokenStream) -> int:
        kind = "T" if token.text == "T" else "X"
        if stream.variable_kind not in (None, kind):
            raise SeriesSyntaxError("cannot mix T with X1, X2, ...", token.position)
        stream.variable_kind = kind
        if kind == "T":
            return 0
        index = int(token.text[1:])
        if index < 1:
            raise SeriesSyntaxError(f"variables are numbered from X1, found {token.text}", token.position)
        return index - 1

    @staticmethod
    def _reject_negative(stream: _TokenStream) -> None:
        if stream.at("OP", "-"):
            raise UnsupportedSeriesError("negative exponents are not supported", stream.peek().position)

    @staticmethod
    def _parse_frac(stream: _TokenStream) -> Tuple[int, int]:
        p = int(stream.expect("NUMBER", what="a number").text)
        q = 1
        if stream.at("OP", "/"):
            stream.next()
            token = stream.expect("NUMBER", what="a denominator")
            q = int(token.text)
            if q == 0:
                raise SeriesSyntaxError("zero denominator", token.position)
        return p, q


def _variable_names(r: int) -> List[str]:
    return ["T"] if r == 1 else [f"X{i}" for i in range(1, r + 1)]


def _format_power(name: str, numerator: int, m: int) -> str:
    if m > 1:
        return f"{name}^({numerator}/{m})"
    return name if numerator == 1 else f"{name}^{numerator}"


def format_series(series: PuiseuxSeries) -> str:
    """
    Render a series in the notation parse_series reads back.

    Exponents are written over the series denominator m when m > 1, so that
    parse_series(format_series(s), nvars=s.r) == s.
    """
    if series.is_zero:
        return "0"
    names = _variable_names(series.r)
    # keep m visible when every exponent is zero
    pin_denominator = series.m > 1 and all(not any(e) for e in series.coefficients)

    parts: List[str] = []
    for exponent in sorted(series.coefficients):
        coefficient = series.coefficients[exponent]
        powers = [_format_power(names[i], e, series.m) for i, e in enumerate(exponent) if e]
        if pin_denominator and not parts:
            powers = [_format_power(names[0], 0, series.m)]
        magnitude = abs(coefficient)
        if not powers:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(powers)
        else:
            body = f"{magnitude}*" + "*".join(powers)
        if not parts:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return " ".join(parts)


# Global parser instance
series_parser = SeriesParser()


def parse_series(text: str, nvars: Optional[int] = None) -> PuiseuxSeries:
    """Convenience function around SeriesParser.parse_series."""
    return series_parser.parse_series(text, nvars)
