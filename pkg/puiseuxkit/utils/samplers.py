"""
Seeded random generators of matrices, supports, series and characteristics.

Every sampler takes a numpy Generator so sweeps are reproducible from one seed.
"""
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterator, List, Tuple

import numpy as np

from ..schemas.domain import BranchCharacteristic, ExponentVector, IntMatrix, PuiseuxSeries


def make_rng(seed: int) -> np.random.Generator:
    """Deterministic generator for a sweep."""
    return np.random.default_rng(seed)


def random_int_matrix(
    rng: np.random.Generator,
    max_rows: int = 5,
    max_cols: int = 7,
    bound: int = 20,
) -> IntMatrix:
    """Matrix of random shape up to max_rows x max_cols, entries in [-bound, bound]."""
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    entries = rng.integers(-bound, bound + 1, size=(rows, cols))
    return IntMatrix.from_rows(entries.tolist())


def random_support(
    rng: np.random.Generator,
    r: int,
    size: int,
    max_entry: int,
) -> List[ExponentVector]:
    """At most size distinct vectors of length r with entries in [0, max_entry]."""
    vectors = {tuple(int(x) for x in rng.integers(0, max_entry + 1, size=r)) for _ in range(size)}
    return sorted(vectors)


def _random_coefficient(rng: np.random.Generator, bound: int = 9) -> Fraction:
    numerator = 0
    while numerator == 0:
        numerator = int(rng.integers(-bound, bound + 1))
    return Fraction(numerator, int(rng.integers(1, bound + 1)))


def random_series(
    rng: np.random.Generator,
    max_r: int = 3,
    max_m: int = 24,
    max_terms: int = 8,
) -> PuiseuxSeries:
    """Nonzero series with r <= max_r, 2 <= m <= max_m and at most max_terms terms."""
    r = int(rng.integers(1, max_r + 1))
    m = int(rng.integers(2, max_m + 1))
    size = int(rng.integers(1, max_terms + 1))
    exponents = random_support(rng, r, size, 3 * m)
    return PuiseuxSeries(r=r, m=m, coefficients={v: _random_coefficient(rng) for v in exponents})


def random_power_series(
    rng: np.random.Generator,
    max_terms: int = 6,
    max_degree: int = 11,
) -> PuiseuxSeries:
    """Univariate power series with constant term 1 and random rational higher terms."""
    coefficients = {(0,): Fraction(1)}
    for _ in range(int(rng.integers(0, max_terms + 1))):
        coefficients[(int(rng.integers(1, max_degree + 1)),)] = _random_coefficient(rng)
    return PuiseuxSeries(r=1, m=1, coefficients=coefficients)


def _proper_divisors(k: int) -> List[int]:
    return [d for d in range(1, k) if k % d == 0]


def random_characteristic(
    rng: np.random.Generator,
    max_m: int = 60,
    max_beta_step: int = 12,
) -> BranchCharacteristic:
    """
    Complete characteristic {m, beta_1, ..., beta_g} built through the e-recursion.

    beta_1 > m. Each e_l is a proper divisor of e_(l-1) and beta_l a multiple of e_l with
    gcd(e_(l-1), beta_l) = e_l; the chain is driven down to 1.
    """
    while True:
        m = int(rng.integers(2, max_m + 1))
        betas: List[int] = []
        chain: List[int] = []
        e = m
        beta = m
        while e > 1:
            divisors = _proper_divisors(e)
            target = divisors[int(rng.integers(0, len(divisors)))]
            candidates = [
                b for b in range(beta + 1, beta + 1 + max_beta_step * e)
                if b % target == 0 and gcd(e, b) == target
            ]
            if not candidates:
                break
            beta = candidates[int(rng.integers(0, min(len(candidates), max_beta_step)))]
            e = target
            betas.append(beta)
            chain.append(e)
        if e == 1:
            return BranchCharacteristic(m=m, betas=tuple(betas), e_chain=tuple(chain))


def discardable_exponents(
    rng: np.random.Generator,
    characteristic: BranchCharacteristic,
    count: int = 3,
) -> List[int]:
    """Exponent numerators that leave the characteristic unchanged: beta_t + k e_t or multiples of m."""
    exponents = []
    for _ in range(count):
        if characteristic.betas and rng.random() < 0.7:
            t = int(rng.integers(0, len(characteristic.betas)))
            k = int(rng.integers(1, 6))
            exponents.append(characteristic.betas[t] + k * characteristic.e_chain[t])
        else:
            exponents.append(characteristic.m * int(rng.integers(1, 4)))
    return exponents


def residue_supports(m: int, r: int, max_size: int) -> Iterator[Tuple[ExponentVector, ...]]:
    """Every nonempty set of at most max_size vectors of {0..m-1}^r."""
    residues = list(product(range(m), repeat=r))
    for size in range(1, max_size + 1):
        yield from combinations(residues, size)
