"""
Exact rational matrices on top of sympy.

The engine keeps coefficients as ``fractions.Fraction``; these helpers move
values into sympy ``Matrix`` objects for determinants and ranks and back.
"""

from fractions import Fraction
from typing import Iterable, Sequence

import sympy


def to_rational(value) -> sympy.Rational:
    """Fraction or int to sympy Rational."""
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_rational(value) -> Fraction:
    """sympy Rational (or Integer) back to Fraction."""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rational_matrix(rows: Iterable[Sequence]) -> sympy.Matrix:
    """Build a sympy Matrix from rows of Fractions or ints."""
    return sympy.Matrix([[to_rational(x) for x in row] for row in rows])


def determinant(matrix: sympy.Matrix) -> Fraction:
    """Exact determinant; the empty matrix has determinant 1."""
    if matrix.rows == 0:
        return Fraction(1)
    return from_rational(matrix.det(method="bareiss"))


def rank(matrix: sympy.Matrix) -> int:
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    return int(matrix.rank())
