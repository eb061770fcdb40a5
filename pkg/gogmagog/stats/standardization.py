"""
Projection and the left/right standardizations of Gog triangles.

Both standardizations start from the projection PX (X without its top row),
whose top row reads 1, ..., k, k+2, ..., n. They lower PX back into a Gog
triangle of size n-1 while controlling the inversion and coinversion counts.

The projection has exactly nu(X) - n + k + 1 coinversions and mu(X) - k
inversions. The standardizations keep those counts only when no lowered
cell meets an unlowered one along an equality: the size-5 triangle with
rows [1], [1,2], [1,2,4], [1,2,3,4], [1,2,3,4,5] loses the coinversion
at (3, 3) under L. standardization_counts reports both the published
values and the pairs lost or gained.
"""

from typing import Iterable

from ..core.errors import NotGogError, SizeError
from ..core.models import Cell, GTTriangle, Grid, StandardizationCounts
from ..triangles.classes import is_gog
from .statistics import mu, nu


def projection(t: GTTriangle) -> GTTriangle:
    """Cut the top row."""
    if t.n < 2:
        raise SizeError("projection needs a triangle of size at least 2")
    return GTTriangle.model_construct(n=t.n - 1, rows=t.rows[:-1])


def _projected(t: GTTriangle) -> tuple[int, Grid]:
    if not is_gog(t):
        raise NotGogError("standardization is defined on Gog triangles")
    p = projection(t)
    return p.n, p.grid()


def fixed_points(t: GTTriangle) -> int:
    """k: number of j with X_{n-1,j} = j."""
    if t.n < 2:
        raise SizeError("fixed points need a triangle of size at least 2")
    return sum(1 for j, v in enumerate(t.rows[-2], start=1) if v == j)


def _left_lowered(size: int, grid: Grid, k: int) -> set[Cell]:
    """Cells of PX outside the top runs of value j in columns j <= k."""
    kept = set()
    for j in range(1, k + 1):
        i = size
        while i >= j and grid[i][j] == j:
            kept.add((i, j))
            i -= 1
    return {(i, j) for i in range(1, size + 1) for j in range(1, i + 1)} - kept


def _right_lowered(size: int, grid: Grid, k: int) -> set[Cell]:
    """For j >= k+1, the SW-NE run of value j+1 ending at (n-1, j)."""
    lowered = set()
    for j in range(k + 1, size + 1):
        depth = 0
        while j - depth >= 1 and grid[size - depth][j - depth] == j + 1:
            lowered.add((size - depth, j - depth))
            depth += 1
    return lowered


def _lower(size: int, grid: Grid, lowered: set[Cell]) -> GTTriangle:
    for i, j in lowered:
        grid[i][j] -= 1
    return GTTriangle.from_grid(size, grid)


def left_standardization(t: GTTriangle) -> GTTriangle:
    """
    LX: for j <= k, keep the run of value j at the top of column j; every
    other cell of PX drops by 1.

    Raises:
        NotGogError: t is not Gog
        SizeError: n < 2
    """
    size, grid = _projected(t)
    return _lower(size, grid, _left_lowered(size, grid, fixed_points(t)))


def right_standardization(t: GTTriangle) -> GTTriangle:
    """
    RX: for j >= k+1, the SW-NE run of value j+1 ending at (n-1, j) drops by 1;
    the rest of PX is kept.

    Raises:
        NotGogError: t is not Gog
        SizeError: n < 2
    """
    size, grid = _projected(t)
    return _lower(size, grid, _right_lowered(size, grid, fixed_points(t)))


def _pair_balance(grid: Grid, lowered: set[Cell], pairs: Iterable[tuple[Cell, Cell]]) -> tuple[int, int]:
    """
    (lost, gained) equalities along pairs (high, low) with PX_high >= PX_low,
    when the cells of `lowered` drop by 1.
    """
    lost = gained = 0
    for high, low in pairs:
        a, b = grid[high[0]][high[1]], grid[low[0]][low[1]]
        if a == b and (high in lowered) != (low in lowered):
            lost += 1
        elif a == b + 1 and high in lowered and low not in lowered:
            gained += 1
    return lost, gained


def _coinversion_pairs(size: int) -> Iterable[tuple[Cell, Cell]]:
    return (((i + 1, j + 1), (i, j)) for i in range(1, size) for j in range(1, i + 1))


def _inversion_pairs(size: int) -> Iterable[tuple[Cell, Cell]]:
    return (((i, j), (i + 1, j)) for i in range(1, size) for j in range(1, i + 1))


def standardization_counts(t: GTTriangle) -> StandardizationCounts:
    """
    Compare the counts of LX and RX with the published values.

    Raises:
        NotGogError: t is not Gog
        SizeError: n < 2
    """
    size, grid = _projected(t)
    n, k = t.n, fixed_points(t)
    left = _left_lowered(size, grid, k)
    right = _right_lowered(size, grid, k)
    nu_lost, nu_gained = _pair_balance(grid, left, _coinversion_pairs(size))
    mu_lost, mu_gained = _pair_balance(grid, right, _inversion_pairs(size))
    lx = _lower(size, [list(row) for row in grid], left)
    rx = _lower(size, [list(row) for row in grid], right)
    mu_x, nu_x = mu(t), nu(t)
    return StandardizationCounts(
        k=k,
        nu_l=nu(lx),
        nu_l_expected=nu_x - n + k + 1,
        nu_l_lost=nu_lost,
        nu_l_gained=nu_gained,
        mu_l_bound_ok=mu(lx) <= mu_x,
        mu_r=mu(rx),
        mu_r_expected=mu_x - k,
        mu_r_lost=mu_lost,
        mu_r_gained=mu_gained,
        nu_r_bound_ok=nu(rx) <= nu_x,
    )
