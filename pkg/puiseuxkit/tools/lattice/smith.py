"""
Smith normal form and gcd of minors for integer matrices.

gcd_minors goes through the invariant factors; gcd_minors_oracle enumerates
every minor and is kept as the independent cross-check.
"""
from itertools import combinations
from math import gcd, prod
from typing import List, Optional, Tuple

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from ...errors import ArgumentError
from ...schemas.domain import IntMatrix


def _smallest_nonzero(a: List[List[int]], k: int) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(k, len(a)):
        for j in range(k, len(a[0])):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _settle_pivot(a: List[List[int]], k: int) -> bool:
    """
    Reduce the block a[k:, k:] to pivot (+) rest with the pivot dividing rest.

    Returns False when the block is zero.
    """
    t, u = len(a), len(a[0])
    while True:
        position = _smallest_nonzero(a, k)
        if position is None:
            return False
        i, j = position
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        pivot = a[k][k]

        clean = True
        for i in range(k + 1, t):
            q = a[i][k] // pivot
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[k])]
            if a[i][k]:
                clean = False
        for j in range(k + 1, u):
            q = a[k][j] // pivot
            if q:
                for row in a:
                    row[j] -= q * row[k]
            if a[k][j]:
                clean = False
        if not clean:
            continue

        # the pivot has to divide everything left in the block
        offender = next(
            (i for i in range(k + 1, t) if any(a[i][j] % pivot for j in range(k + 1, u))),
            None,
        )
        if offender is None:
            return True
        a[k] = [x + y for x, y in zip(a[k], a[offender])]


def smith_normal_form(matrix: IntMatrix) -> Tuple[int, ...]:
    """
    Invariant factors d_1 | d_2 | ... of an integer matrix.

    Elimination with pivoting on the entry of smallest absolute value.

    Args:
        matrix: t x u integer matrix

    Returns:
        min(t, u) nonnegative integers; trailing zeros for rank deficiency
    """
    a = matrix.to_rows()
    size = min(matrix.rows, matrix.cols)
    factors: List[int] = []
    for k in range(size):
        if not _settle_pivot(a, k):
            factors.extend([0] * (size - k))
            break
        factors.append(abs(a[k][k]))
    return tuple(factors)


def _check_order(matrix: IntMatrix, l: int) -> None:
    if not 1 <= l <= min(matrix.rows, matrix.cols):
        raise ArgumentError(
            f"minor order {l} out of range 1..{min(matrix.rows, matrix.cols)} "
            f"for a {matrix.rows}x{matrix.cols} matrix"
        )


def gcd_minors(matrix: IntMatrix, l: int) -> int:
    """
    (l)gcd(A): gcd of all l x l minors, as d_1 * ... * d_l.

    Args:
        matrix: Integer matrix
        l: Minor order, 1 <= l <= min(rows, cols)

    Returns:
        Nonnegative gcd; 0 iff every l-minor vanishes
    """
    _check_order(matrix, l)
    return prod(smith_normal_form(matrix)[:l])


def gcd_minors_oracle(matrix: IntMatrix, l: int) -> int:
    """(l)gcd(A) by enumerating every l x l minor with exact determinants."""
    _check_order(matrix, l)
    rows = matrix.to_rows()
    result = 0
    for row_set in combinations(range(matrix.rows), l):
        for col_set in combinations(range(matrix.cols), l):
            minor = DomainMatrix(
                [[ZZ(rows[i][j]) for j in col_set] for i in row_set], (l, l), ZZ
            )
            result = gcd(result, int(minor.det()))
            if result == 1:
                return 1
    return result
