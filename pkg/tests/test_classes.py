"""
Membership in Gog, Magog and GOGAm, and the vertical reflection.
"""

import pytest

from gogmagog.core.errors import NotGogError
from gogmagog.core.models import Family
from gogmagog.enumeration.engine import enumerate_gt
from gogmagog.enumeration.families import enumerate_gog
from gogmagog.triangles.classes import (
    gogam_index_sequences,
    is_gog,
    is_gogam,
    is_gogam_by_inequality,
    is_magog,
    is_member,
    reflect,
)
from gogmagog.triangles.gt import identity_triangle, make_triangle, maximum_gog_triangle
from gogmagog.triangles.schutzenberger import schutzenberger


def test_inversion_example_is_gog_only(inversion_example):
    assert is_gog(inversion_example)
    assert not is_magog(inversion_example)


def test_identity_is_gog_and_magog_but_not_gogam():
    t = identity_triangle(4)
    assert is_member(Family.GOG, t)
    assert is_member(Family.MAGOG, t)
    assert not is_member(Family.GOGAM, t)
    assert not is_gogam_by_inequality(t)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_identity_is_sent_to_the_maximum_triangle(n):
    t = identity_triangle(n)
    assert not is_gogam_by_inequality(t)
    assert schutzenberger(t) == maximum_gog_triangle(n)


def test_gog_needs_top_row_one_to_n():
    assert not is_gog(make_triangle(2, [[1], [1, 3]]))


def test_gog_needs_strict_rows():
    assert not is_gog(make_triangle(3, [[2], [2, 2], [1, 2, 3]]))


def test_magog_bounds_diagonal_heads():
    assert is_magog(make_triangle(2, [[1], [1, 2]]))
    assert not is_magog(make_triangle(2, [[2], [2, 2]]))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_index_sequence_count(n):
    assert len(gogam_index_sequences(n)) == 2 ** (n - 1) - 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_gogam_tests_agree(n):
    for t in enumerate_gt(n, n + 1):
        assert is_gogam(t) == is_gogam_by_inequality(t), t.rows


def test_reflect_identity_is_maximum():
    assert reflect(identity_triangle(5)) == maximum_gog_triangle(5)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reflect_is_an_involution_on_gog(n):
    for t in enumerate_gog(n):
        image = reflect(t)
        assert is_gog(image)
        assert reflect(image) == t


def test_reflect_rejects_non_gog():
    with pytest.raises(NotGogError):
        reflect(make_triangle(2, [[1], [1, 1]]))
