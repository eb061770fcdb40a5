"""Stats module - statistics, standardization, the diamond set and Z(n, x, y)."""

from .statistics import alpha, beta, gamma, mu, nu, stat_record, statistic
from .standardization import (
    fixed_points,
    left_standardization,
    projection,
    right_standardization,
    standardization_counts,
)
from .diamond import (
    achieving_triangle,
    corner_pairs,
    corner_triangle,
    diamond_set,
    pp1_violations,
    triangular,
)
from .polynomial import BivariatePolynomial
from .zpoly import (
    antidiagonal,
    bareiss_determinant,
    cofactor_determinant,
    joint_counts,
    mahonian,
    polynomial_from_counts,
    z_brute,
    z_cofactor,
    z_determinant,
    z_matrix,
)

__all__ = [
    "alpha",
    "beta",
    "gamma",
    "mu",
    "nu",
    "stat_record",
    "statistic",
    "fixed_points",
    "left_standardization",
    "projection",
    "right_standardization",
    "standardization_counts",
    "achieving_triangle",
    "corner_pairs",
    "corner_triangle",
    "diamond_set",
    "pp1_violations",
    "triangular",
    "BivariatePolynomial",
    "antidiagonal",
    "bareiss_determinant",
    "cofactor_determinant",
    "joint_counts",
    "mahonian",
    "polynomial_from_counts",
    "z_brute",
    "z_cofactor",
    "z_determinant",
    "z_matrix",
]
