"""
Alternating sign matrices and Gog triangles.
"""

import itertools
import math

import pytest

from gogmagog.core.errors import DomainError, InexactDivisionError, NotGogError, ShapeError
from gogmagog.core.models import ASM, Family
from gogmagog.enumeration.families import enumerate_gog
from gogmagog.stats.statistics import alpha, beta, gamma, mu, nu
from gogmagog.triangles.asm import (
    a_n,
    asm_to_gog,
    count_minus_ones,
    enumerate_asms,
    gog_to_asm,
    one_positions,
    permutation_matrix,
    reflect_asm,
)
from gogmagog.triangles.classes import reflect
from gogmagog.triangles.gt import identity_triangle, make_triangle, maximum_gog_triangle


def test_worked_example(inversion_example, inversion_example_asm):
    assert asm_to_gog(inversion_example_asm) == inversion_example
    assert gog_to_asm(inversion_example) == inversion_example_asm
    assert count_minus_ones(inversion_example_asm) == 2


def test_permutation_matrices_at_the_extremes():
    assert asm_to_gog(permutation_matrix((1, 2, 3, 4))) == maximum_gog_triangle(4)
    assert asm_to_gog(permutation_matrix((4, 3, 2, 1))) == identity_triangle(4)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429), (6, 7436)])
def test_asm_numbers(n, expected):
    assert a_n(n) == expected


def test_asm_number_rejects_a_remainder(monkeypatch):
    monkeypatch.setattr(math, "factorial", lambda k: k + 1)
    with pytest.raises(InexactDivisionError):
        a_n(2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trip(n):
    asms = list(enumerate_asms(n))
    assert len(asms) == a_n(n)
    assert len({m.cells for m in asms}) == a_n(n)
    for t in enumerate_gog(n):
        assert asm_to_gog(gog_to_asm(t)) == t


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_minus_ones_complement_inversions(n):
    top = n * (n - 1) // 2
    for t in enumerate_gog(n):
        assert mu(t) + nu(t) + count_minus_ones(gog_to_asm(t)) == top


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_permutations_have_no_minus_ones(n):
    for perm in itertools.permutations(range(1, n + 1)):
        m = permutation_matrix(perm)
        assert count_minus_ones(m) == 0
        assert gog_to_asm(asm_to_gog(m)) == m


@pytest.mark.parametrize("n", [2, 3, 4])
def test_statistics_read_off_the_matrix(n):
    for t in enumerate_gog(n):
        first_column, last_row, last_column = one_positions(gog_to_asm(t))
        assert alpha(Family.GOG, t) == first_column
        assert beta(Family.GOG, t) == last_row
        assert gamma(Family.GOG, t) == last_column


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reflection_commutes(n):
    for t in enumerate_gog(n):
        assert asm_to_gog(reflect_asm(gog_to_asm(t))) == reflect(t)


@pytest.mark.parametrize("cells, error", [
    (((1, 1), (0, 0)), DomainError),
    (((0, 1), (0, 1)), DomainError),
    (((2, 0), (0, 1)), DomainError),
    (((1, 0),), ShapeError),
])
def test_invalid_matrices(cells, error):
    with pytest.raises(error):
        ASM(n=2, cells=cells)


def test_gog_to_asm_needs_gog():
    with pytest.raises(NotGogError):
        gog_to_asm(make_triangle(2, [[1], [1, 1]]))
