"""Triangles module - GT lattice, Schützenberger involution, families, shapes and ASMs."""

from .gt import (
    constant_triangle,
    entry,
    identity_triangle,
    join,
    leq,
    make_triangle,
    maximum_gog_triangle,
    meet,
)
from .schutzenberger import apply_word, braid_witness, omega_j, s_k, schutzenberger
from .classes import (
    is_gog,
    is_gogam,
    is_gogam_by_inequality,
    is_magog,
    is_member,
    reflect,
)
from .shapes import (
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
    minimal_extension,
    reflect_trapezoid,
)
from .asm import (
    a_n,
    asm_to_gog,
    count_minus_ones,
    enumerate_asms,
    gog_to_asm,
    one_positions,
    permutation_matrix,
    reflect_asm,
)

__all__ = [
    "constant_triangle",
    "entry",
    "identity_triangle",
    "join",
    "leq",
    "make_triangle",
    "maximum_gog_triangle",
    "meet",
    "apply_word",
    "braid_witness",
    "omega_j",
    "s_k",
    "schutzenberger",
    "is_gog",
    "is_gogam",
    "is_gogam_by_inequality",
    "is_magog",
    "is_member",
    "reflect",
    "complete_gog_left",
    "complete_gog_right",
    "complete_gogam_left",
    "complete_gogam_right",
    "complete_magog_right",
    "complete_pentagon",
    "cut_left",
    "cut_pentagon",
    "cut_right",
    "is_left_gog",
    "is_left_gogam",
    "is_pentagon_member",
    "is_right_gog",
    "is_right_gogam",
    "is_right_magog",
    "is_trapezoid_member",
    "minimal_extension",
    "reflect_trapezoid",
    "a_n",
    "asm_to_gog",
    "count_minus_ones",
    "enumerate_asms",
    "gog_to_asm",
    "one_positions",
    "permutation_matrix",
    "reflect_asm",
]
