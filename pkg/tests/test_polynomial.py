"""
Exact bivariate polynomials and the generating polynomial Z(n, x, y).

sympy's Berkowitz determinant serves as an independent oracle.
"""

import pytest
import sympy

from gogmagog.core.errors import InexactDivisionError
from gogmagog.stats.polynomial import BivariatePolynomial
from gogmagog.stats.zpoly import (
    antidiagonal,
    bareiss_determinant,
    cofactor_determinant,
    mahonian,
    z_brute,
    z_cofactor,
    z_determinant,
    z_matrix,
)
from gogmagog.triangles.asm import a_n

X = BivariatePolynomial.x()
Y = BivariatePolynomial.y()

Z3 = X ** 3 + X * Y + Y ** 3 + 2 * X ** 2 * Y + 2 * X * Y ** 2

# Joint (mu, nu) counts of size-4 Gog triangles, indexed [mu][nu].
TABLE_FOUR = [
    [0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 2, 3, 0],
    [0, 0, 0, 6, 5, 0, 0],
    [0, 1, 6, 6, 0, 0, 0],
    [0, 2, 5, 0, 0, 0, 0],
    [0, 3, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0],
]


# ==============================================================================
# Arithmetic
# ==============================================================================

def test_zero_terms_are_dropped():
    p = BivariatePolynomial({(1, 0): 2, (0, 1): 0})
    assert p.terms == {(1, 0): 2}
    assert (X - X).is_zero()
    assert BivariatePolynomial.zero() == 0


def test_arithmetic_with_integers():
    assert (X + 1) * (X - 1) == X ** 2 - 1
    assert 3 - X == -(X - 3)
    assert 2 * Y == Y + Y


def test_exact_division():
    product = (X + Y) * (X ** 2 - 2 * Y + 5)
    assert product.exact_div(X + Y) == X ** 2 - 2 * Y + 5
    with pytest.raises(InexactDivisionError):
        (X ** 2 + 1).exact_div(X + Y)
    with pytest.raises(InexactDivisionError):
        X.exact_div(BivariatePolynomial.zero())


def test_printing_and_json():
    assert str(Z3) == "x^3 + 2*x^2*y + 2*x*y^2 + y^3 + x*y"
    assert str(BivariatePolynomial.zero()) == "0"
    assert str(1 - X) == "-x + 1"
    assert BivariatePolynomial.from_json(Z3.to_json()) == Z3
    assert Z3.to_dict()["terms"][0] == {"x": 3, "y": 0, "c": "1"}


def test_evaluate_and_swap():
    assert Z3.evaluate(1, 1) == 7
    assert (X ** 2 * Y).swap() == X * Y ** 2
    assert hash(Z3.swap()) == hash(Z3)


# ==============================================================================
# Z(n, x, y)
# ==============================================================================

def test_matrix_three():
    x, y = sympy.symbols("x y")
    expected = sympy.Matrix([
        [1, 1, 1],
        [x - y, 2 * x, 3 * x],
        [x, 2 * x + x ** 2 - y ** 2, 3 * x + 3 * x ** 2],
    ])
    assert (z_matrix(3) - expected).expand() == sympy.zeros(3, 3)


def test_z_three():
    assert z_brute(3) == Z3
    assert z_determinant(3) == Z3
    assert z_cofactor(3) == Z3


def test_z_one():
    assert z_brute(1) == 1
    assert z_determinant(1) == 1


def test_joint_table_four():
    z = z_brute(4)
    for m, row in enumerate(TABLE_FOUR):
        for v, expected in enumerate(row):
            assert z.coefficient(v, m) == expected, f"mu={m} nu={v}"


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_determinant_matches_enumeration(n):
    brute = z_brute(n)
    assert z_determinant(n) == brute
    assert z_cofactor(n) == brute
    assert brute.swap() == brute
    assert brute.evaluate(1, 1) == a_n(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_determinant_against_sympy(n):
    oracle = z_matrix(n).det(method="berkowitz")
    assert sympy.expand(oracle - z_determinant(n).as_expr()) == 0


def test_bareiss_needs_row_swaps():
    x, y = sympy.symbols("x y")
    matrix = sympy.Matrix([[0, x], [y, 1]])
    assert bareiss_determinant(matrix) == -(X * Y)
    assert cofactor_determinant(matrix) == -(X * Y)


@pytest.mark.parametrize("n, expected", [
    (1, (1,)),
    (3, (1, 2, 2, 1)),
    (4, (1, 3, 5, 6, 5, 3, 1)),
])
def test_mahonian(n, expected):
    assert mahonian(n) == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_antidiagonal_is_mahonian(n):
    assert antidiagonal(z_brute(n), n) == mahonian(n)


def test_polynomial_wraps_sympy_poly():
    assert Z3.poly.domain == sympy.ZZ
    x, y = sympy.symbols("x y")
    assert BivariatePolynomial.from_expr((x + y) ** 2) == X ** 2 + 2 * X * Y + Y ** 2
    assert sympy.expand(Z3.as_expr() - (x ** 3 + x * y + y ** 3 + 2 * x ** 2 * y + 2 * x * y ** 2)) == 0
