"""Bijections module - standard procedure, left trapezoid maps and the pentagon table."""

from .standard import (
    coinversions,
    covered_cells,
    inversions,
    standard_image,
    standard_procedure,
    standard_procedure_inverse,
)
from .left_trapezoids import (
    column_inversions,
    is_left_gogam_two,
    left1_gog_to_gogam,
    left1_gogam_to_gog,
    left2_gog_to_gogam,
    left2_gogam_to_gog,
)
from .pentagon333 import (
    IMAGE_TABLE,
    inversion_pattern,
    is_gog_pentagon333,
    is_gogam_pentagon333,
    make_pentagon333,
    pentagon333_gog_to_gogam,
    pentagon333_gogam_to_gog,
    pentagon_values,
)

__all__ = [
    "coinversions",
    "covered_cells",
    "inversions",
    "standard_image",
    "standard_procedure",
    "standard_procedure_inverse",
    "column_inversions",
    "is_left_gogam_two",
    "left1_gog_to_gogam",
    "left1_gogam_to_gog",
    "left2_gog_to_gogam",
    "left2_gogam_to_gog",
    "IMAGE_TABLE",
    "inversion_pattern",
    "is_gog_pentagon333",
    "is_gogam_pentagon333",
    "make_pentagon333",
    "pentagon333_gog_to_gogam",
    "pentagon333_gogam_to_gog",
    "pentagon_values",
]
