"""
Standard procedure and the left trapezoid bijections.

Claims under test:
- the standard procedure lands in GOGAm whenever its image is GT, and is undone on admissible inputs
- permutation triangles are admissible
- left1 is the identity and left2 is a bijection with the worked n=7 image
- left2 keeps the bottom entry and the number of first-diagonal inversions
"""

import itertools

import pytest

from gogmagog.bijections.left_trapezoids import (
    column_inversions,
    is_left_gogam_two,
    left1_gog_to_gogam,
    left1_gogam_to_gog,
    left2_gog_to_gogam,
    left2_gogam_to_gog,
)
from gogmagog.bijections.standard import (
    coinversions,
    covered_cells,
    inversions,
    standard_image,
    standard_procedure,
    standard_procedure_inverse,
)
from gogmagog.core.errors import NotGogError, NotGTImageError, NotLeftGogamError, NotLeftGogError
from gogmagog.core.models import Family, GTTriangle, LeftTrapezoid, grid_to_rows, is_gt_grid
from gogmagog.enumeration.families import enumerate_gog, enumerate_left_trapezoids
from gogmagog.triangles.asm import asm_to_gog, permutation_matrix
from gogmagog.triangles.classes import is_gogam
from gogmagog.triangles.gt import identity_triangle, make_triangle, maximum_gog_triangle


def left_trapezoid(first_top_down, second_top_down) -> LeftTrapezoid:
    """(n, 2) trapezoid from its two columns read top-down."""
    first = list(reversed(first_top_down))
    second = list(reversed(second_top_down))
    rows = [(first[0],)] + [(first[i], second[i - 1]) for i in range(1, len(first))]
    return LeftTrapezoid(n=len(first), k=2, rows=tuple(rows))


# ==============================================================================
# Inversions and the standard procedure
# ==============================================================================

def test_inversions_of_worked_example(inversion_example):
    assert inversions(inversion_example) == ((2, 2), (4, 1), (3, 1))
    assert len(coinversions(inversion_example)) == 5


def test_inversion_extremes():
    assert len(inversions(identity_triangle(5))) == 10
    assert inversions(maximum_gog_triangle(5)) == ()


def test_covered_cells():
    assert covered_cells((2, 2), 5) == ((3, 3), (4, 4), (5, 5))
    assert covered_cells((3, 2), 5) == ((4, 3), (5, 4))
    assert covered_cells((4, 1), 5) == ((5, 2),)


def test_standard_procedure_on_worked_example(inversion_example):
    y, admissible = standard_procedure(inversion_example)
    assert y.rows == ((3,), (2, 4), (1, 4, 4), (1, 2, 4, 4), (1, 1, 2, 4, 4))
    assert admissible
    assert is_gogam(y)
    assert standard_procedure_inverse(y) == inversion_example


def test_inversion_free_triangle_is_fixed():
    t = maximum_gog_triangle(4)
    assert standard_procedure(t) == (t, True)
    assert standard_procedure_inverse(t) == t


def test_standard_procedure_needs_gog():
    with pytest.raises(NotGogError):
        standard_procedure(make_triangle(2, [[1], [1, 1]]))


NON_GT_IMAGE_SOURCE = ((2,), (2, 3), (1, 3, 4), (1, 2, 3, 4))


def test_standard_image_can_leave_gt_triangles():
    t = make_triangle(4, [list(row) for row in NON_GT_IMAGE_SOURCE])
    assert inversions(t) == ((2, 2), (3, 1), (1, 1))
    grid, admissible = standard_image(t)
    assert grid_to_rows(grid) == ((2,), (2, 2), (1, 3, 2), (1, 1, 3, 2))
    assert not admissible
    assert not is_gt_grid(4, grid)
    with pytest.raises(NotGTImageError) as info:
        standard_procedure(t)
    assert info.value.rows == ((2,), (2, 2), (1, 3, 2), (1, 1, 3, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_gt_images_land_in_gogam(n):
    for t in enumerate_gog(n):
        grid, admissible = standard_image(t)
        if not is_gt_grid(n, grid):
            assert not admissible
            continue
        y = GTTriangle.from_grid(n, grid)
        assert is_gogam(y), t.rows
        if admissible:
            assert standard_procedure_inverse(y) == t


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_non_gt_images_are_rare(n):
    sources = [t.rows for t in enumerate_gog(n) if not is_gt_grid(n, standard_image(t)[0])]
    assert sources == ([NON_GT_IMAGE_SOURCE] if n == 4 else [])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_permutation_triangles_are_admissible(n):
    for perm in itertools.permutations(range(1, n + 1)):
        t = asm_to_gog(permutation_matrix(perm))
        y, admissible = standard_procedure(t)
        assert admissible, perm
        assert standard_procedure_inverse(y) == t


# ==============================================================================
# Left trapezoids
# ==============================================================================

def test_left1_is_identity():
    for n in range(1, 6):
        for tr in enumerate_left_trapezoids(Family.GOG, n, 1):
            assert left1_gog_to_gogam(tr) == tr
            assert left1_gogam_to_gog(tr) == tr


def test_left1_rejects_wider_trapezoids():
    tr = next(enumerate_left_trapezoids(Family.GOG, 3, 2))
    with pytest.raises(NotLeftGogError):
        left1_gog_to_gogam(tr)


def test_left2_worked_example():
    x = left_trapezoid((1, 1, 1, 2, 3, 3, 3), (2, 2, 4, 4, 4, 4))
    y = left_trapezoid((1, 1, 1, 1, 2, 3, 3), (1, 1, 3, 3, 3, 3))
    assert left2_gog_to_gogam(x) == y
    assert left2_gogam_to_gog(y) == x
    assert is_left_gogam_two(y)


def test_left2_moves_inversion_positions():
    x = left_trapezoid((1, 1, 1, 2, 3, 3, 3), (2, 2, 4, 4, 4, 4))
    y = left2_gog_to_gogam(x)
    before = column_inversions(x.column(1), 7)
    after = column_inversions(y.column(1), 7)
    assert before == [6, 5, 2, 1]
    assert after == [6, 5, 4, 1]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_left2_is_a_bijection(n):
    gog = list(enumerate_left_trapezoids(Family.GOG, n, 2))
    gogam = list(enumerate_left_trapezoids(Family.GOGAM, n, 2))
    images = [left2_gog_to_gogam(tr) for tr in gog]
    assert sorted(tr.key for tr in images) == [tr.key for tr in gogam]
    for tr, image in zip(gog, images):
        assert image.rows[0] == tr.rows[0]
        assert len(column_inversions(image.column(1), n)) == len(column_inversions(tr.column(1), n))
        assert left2_gogam_to_gog(image) == tr
    for tr in gogam:
        assert is_left_gogam_two(tr)
        assert left2_gog_to_gogam(left2_gogam_to_gog(tr)) == tr


def test_left2_rejects_foreign_trapezoids():
    not_gog = left_trapezoid((1, 2, 2), (2, 2))
    with pytest.raises(NotLeftGogError):
        left2_gog_to_gogam(not_gog)
    not_gogam = left_trapezoid((1, 2, 3), (3, 3))
    with pytest.raises(NotLeftGogamError):
        left2_gogam_to_gog(not_gogam)


@pytest.mark.slow
def test_left2_is_a_bijection_at_seven():
    gog = list(enumerate_left_trapezoids(Family.GOG, 7, 2))
    gogam = {tr.key for tr in enumerate_left_trapezoids(Family.GOGAM, 7, 2)}
    images = {left2_gog_to_gogam(tr).key for tr in gog}
    assert len(images) == len(gog) == len(gogam)
    assert images == gogam
