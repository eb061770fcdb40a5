"""
Trapezoids and pentagons.

Claims under test:
- cuts of family triangles are family members
- canonical completions extend the cut and lie below every extension
- the vertical reflection swaps left and right Gog trapezoids
"""

import itertools

import pytest

from gogmagog.core.errors import NotExtensibleError, NotInFamilyError, ShapeError
from gogmagog.core.models import Family, GTTriangle, LeftTrapezoid, PartialTriangle, Pentagon, RightTrapezoid
from gogmagog.enumeration.families import enumerate_gog, enumerate_magog, gogam_triangles
from gogmagog.triangles.classes import is_gog, reflect
from gogmagog.triangles.gt import leq
from gogmagog.triangles.shapes import (
    complete_gog_left,
    complete_gog_right,
    complete_gogam_left,
    complete_gogam_right,
    complete_magog_right,
    complete_pentagon,
    cut_left,
    cut_pentagon,
    cut_right,
    is_left_gog,
    is_left_gogam,
    is_pentagon_member,
    is_right_gog,
    is_right_gogam,
    is_right_magog,
    is_trapezoid_member,
    reflect_trapezoid,
)


def test_cuts_of_inversion_example(inversion_example):
    assert cut_left(inversion_example, 2).rows == ((3,), (2, 4), (1, 4), (1, 3), (1, 2))
    assert cut_right(inversion_example, 2).rows == ((3,), (2, 4), (4, 5), (4, 5), (4, 5))
    assert cut_pentagon(inversion_example, 2, 2, 3).rows == ((3,), (2, 4), (4,))


@pytest.mark.parametrize("k", [0, 6])
def test_cut_rejects_bad_k(inversion_example, k):
    with pytest.raises(ShapeError):
        cut_left(inversion_example, k)


def test_trapezoid_model_validates_rows():
    with pytest.raises(ShapeError):
        LeftTrapezoid(n=3, k=2, rows=((1,), (1, 2), (1, 2, 3)))
    with pytest.raises(ShapeError):
        RightTrapezoid(n=2, k=3, rows=((1,), (1, 2)))


def test_partial_triangle_needs_a_region():
    with pytest.raises(TypeError):
        PartialTriangle(n=1, rows=((1,),))
    assert GTTriangle(n=2, rows=((1,), (1, 2))).span(2) == range(1, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gog_completions_are_minimal(n):
    gog = list(enumerate_gog(n))
    for k in range(1, n + 1):
        for t in gog:
            right = complete_gog_right(cut_right(t, k))
            left = complete_gog_left(cut_left(t, k))
            assert is_gog(right) and cut_right(right, k) == cut_right(t, k)
            assert is_gog(left) and cut_left(left, k) == cut_left(t, k)
            assert leq(right, t) and leq(left, t)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cuts_are_members(n):
    for k in range(1, n + 1):
        for t in enumerate_gog(n):
            assert is_left_gog(cut_left(t, k)) and is_right_gog(cut_right(t, k))
        for t in enumerate_magog(n):
            piece = cut_right(t, k)
            assert is_right_magog(piece)
            assert cut_right(complete_magog_right(piece), k) == piece
        for t in gogam_triangles(n):
            assert is_left_gogam(cut_left(t, k))
            assert is_right_gogam(cut_right(t, k))
            assert cut_left(complete_gogam_left(cut_left(t, k)), k) == cut_left(t, k)
            assert cut_right(complete_gogam_right(cut_right(t, k)), k) == cut_right(t, k)


def test_left_magog_trapezoids_are_undefined(inversion_example):
    with pytest.raises(NotInFamilyError):
        is_trapezoid_member(Family.MAGOG, cut_left(inversion_example, 2))


def test_completion_failure_raises():
    tr = LeftTrapezoid(n=3, k=1, rows=((3,), (3,), (1,)))
    assert not is_left_gog(tr)
    with pytest.raises(NotExtensibleError):
        complete_gog_left(tr)


@pytest.mark.parametrize("n", [3, 4])
def test_gog_pentagon_completion_is_minimal(n):
    gog = list(enumerate_gog(n))
    for k, l, m in itertools.product(range(1, n + 1), repeat=3):
        for t in gog:
            p = cut_pentagon(t, k, l, m)
            completion = complete_pentagon(Family.GOG, p)
            assert cut_pentagon(completion, k, l, m) == p
            assert leq(completion, t)


def test_pentagon_family_rules():
    p = Pentagon(n=3, k=1, l=1, m=1, rows=((2,),))
    assert is_pentagon_member(Family.GOG, p)
    assert not is_pentagon_member(Family.GOG, Pentagon(n=3, k=1, l=2, m=2, rows=((3,), (3,))))
    with pytest.raises(NotInFamilyError):
        complete_pentagon(Family.MAGOG, p)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reflection_swaps_sides(n):
    for k in range(1, n + 1):
        for t in enumerate_gog(n):
            mirrored = reflect_trapezoid(cut_left(t, k))
            assert isinstance(mirrored, RightTrapezoid)
            assert mirrored == cut_right(reflect(t), k)
            assert is_right_gog(mirrored)
