"""
The generating polynomial Z(n, x, y) = sum over Gog triangles of x^nu y^mu.

Computed either by enumeration or as the determinant of an n x n sympy
matrix of polynomials: fraction-free elimination through DomainMatrix over
ZZ[x, y], with a cofactor expansion kept as a cross-check.
"""

import logging
from collections import Counter
from typing import Sequence

import sympy
from sympy.polys.matrices import DomainMatrix

from ..enumeration.families import enumerate_gog
from .polynomial import X, Y, BivariatePolynomial
from .statistics import mu, nu

logger = logging.getLogger(__name__)


def joint_counts(n: int, prefix: Sequence[int] = ()) -> Counter:
    """Counter of (nu, mu) over size-n Gog triangles with the given key prefix."""
    return Counter((nu(t), mu(t)) for t in enumerate_gog(n, prefix))


def polynomial_from_counts(counts: Counter) -> BivariatePolynomial:
    return BivariatePolynomial(dict(counts))


def z_brute(n: int) -> BivariatePolynomial:
    """Z(n, x, y) by enumerating every Gog triangle."""
    return polynomial_from_counts(joint_counts(n))


def z_matrix(n: int) -> sympy.Matrix:
    """
    Entries -y^i [i = j+1] + sum_k C(i-1, i-k) C(j+1, k) x^k, for 0 <= i, j <= n-1.
    """
    def entry(i: int, j: int) -> sympy.Expr:
        total = sum(
            (sympy.binomial(i - 1, i - k) * sympy.binomial(j + 1, k) * X ** k
             for k in range(min(i, j + 1) + 1)),
            sympy.Integer(0),
        )
        return total - Y ** i if i == j + 1 else total

    return sympy.Matrix(n, n, entry)


def bareiss_determinant(matrix: sympy.Matrix) -> BivariatePolynomial:
    """Fraction-free determinant over ZZ[x, y]."""
    if matrix.rows == 0:
        return BivariatePolynomial.one()
    dm = DomainMatrix.from_Matrix(matrix)
    logger.debug("determinant of a %dx%d matrix over %s", matrix.rows, matrix.cols, dm.domain)
    return BivariatePolynomial.from_expr(dm.domain.to_sympy(dm.det()))


def cofactor_determinant(matrix: sympy.Matrix) -> BivariatePolynomial:
    """Laplace expansion along the first row."""
    return BivariatePolynomial.from_expr(sympy.expand(_laplace(matrix)))


def _laplace(matrix: sympy.Matrix) -> sympy.Expr:
    if matrix.rows == 0:
        return sympy.Integer(1)
    if matrix.rows == 1:
        return matrix[0, 0]
    total = sympy.Integer(0)
    for j in range(matrix.cols):
        if matrix[0, j] != 0:
            total += (-1) ** j * matrix[0, j] * _laplace(matrix.minor_submatrix(0, j))
    return total


def z_determinant(n: int) -> BivariatePolynomial:
    """Z(n, x, y) as the determinant of z_matrix(n)."""
    return bareiss_determinant(z_matrix(n))


def z_cofactor(n: int) -> BivariatePolynomial:
    """Z(n, x, y) by cofactor expansion; practical up to n = 6."""
    return cofactor_determinant(z_matrix(n))


def mahonian(n: int) -> tuple[int, ...]:
    """Permutations of n by inversion count: coefficients of prod_{i<n} (1 + q + ... + q^i)."""
    q = sympy.symbols("q")
    product = sympy.prod(sum(q ** e for e in range(i + 1)) for i in range(n))
    return tuple(int(c) for c in reversed(sympy.Poly(product, q).all_coeffs()))


def antidiagonal(z: BivariatePolynomial, n: int) -> tuple[int, ...]:
    """Coefficients with mu + nu = n(n-1)/2, indexed by mu."""
    top = n * (n - 1) // 2
    return tuple(z.coefficient(top - m, m) for m in range(top + 1))
