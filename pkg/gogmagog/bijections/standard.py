"""
Inversions, covering and the standard procedure from Gog to GOGAm triangles.

An inversion is a cell (i, j), i < n, with X_{i,j} = X_{i+1,j}. It covers
the cells (i + p, j + p) for 1 <= p <= n - i. Inversions are processed
NW-SE diagonal by diagonal from the rightmost one (j descending), each
diagonal from NW to SE (i descending).
"""

import logging

from ..core.errors import NotGogError, NotGTImageError, NotInvertibleError
from ..core.models import Cell, GTTriangle, Grid, InversionList, grid_to_rows, is_gt_grid
from ..triangles.classes import is_gog

logger = logging.getLogger(__name__)


def _scan_order(n: int) -> list[Cell]:
    return [(i, j) for j in range(n - 1, 0, -1) for i in range(n - 1, j - 1, -1)]


def _is_inversion(grid: Grid, i: int, j: int) -> bool:
    return grid[i][j] == grid[i + 1][j]


def inversions(t: GTTriangle) -> InversionList:
    """All inversion cells of t, in processing order."""
    grid = t.grid()
    return tuple(cell for cell in _scan_order(t.n) if _is_inversion(grid, *cell))


def coinversions(t: GTTriangle) -> InversionList:
    """Cells (i, j), i < n, with X_{i,j} = X_{i+1,j+1}."""
    grid = t.grid()
    return tuple(
        (i, j) for i in range(1, t.n) for j in range(1, i + 1) if grid[i][j] == grid[i + 1][j + 1]
    )


def covered_cells(inv: Cell, n: int) -> tuple[Cell, ...]:
    """Cells (k + p, l + p), 1 <= p <= n - k, covered by the inversion (k, l)."""
    k, l = inv
    return tuple((k + p, l + p) for p in range(1, n - k + 1))


def _shift(grid: Grid, inv: Cell, n: int, delta: int) -> None:
    for i, j in covered_cells(inv, n):
        grid[i][j] += delta


def standard_image(t: GTTriangle) -> tuple[Grid, bool]:
    """
    Subtract 1 from the cells covered by each inversion, in processing order.

    The resulting array is returned as a raw grid: it is not always a GT
    triangle (the size-4 Gog triangle with rows [2], [2,3], [1,3,4],
    [1,2,3,4] ends with top row 1, 1, 3, 2).

    Returns:
        (grid, admissible): the image and whether every intermediate array
        was a GT triangle

    Raises:
        NotGogError: t is not a Gog triangle
    """
    if not is_gog(t):
        raise NotGogError("the standard procedure starts from a Gog triangle")
    n = t.n
    grid = t.grid()
    admissible = True
    for inv in inversions(t):
        _shift(grid, inv, n, -1)
        if admissible and not is_gt_grid(n, grid):
            admissible = False
    return grid, admissible


def standard_procedure(t: GTTriangle) -> tuple[GTTriangle, bool]:
    """
    The standard procedure as a map into GT triangles.

    Returns:
        (Y, admissible): the GOGAm triangle and whether every intermediate
        array was a GT triangle

    Raises:
        NotGogError: t is not a Gog triangle
        NotGTImageError: the image is not a GT triangle
    """
    grid, admissible = standard_image(t)
    if not is_gt_grid(t.n, grid):
        rows = grid_to_rows(grid)
        logger.debug("standard procedure image %s is not GT", rows)
        raise NotGTImageError(f"standard procedure image {rows} is not a GT triangle", rows)
    return GTTriangle.from_grid(t.n, grid), admissible


def standard_procedure_inverse(y: GTTriangle) -> GTTriangle:
    """
    Undo the standard procedure.

    Positions are scanned in the reverse processing order; whenever the
    current array has an inversion there, 1 is added to the covered cells.
    Columns left of the scanned one are already restored at that moment, so
    the inversions met are exactly those of the original triangle.

    Raises:
        NotInvertibleError: an intermediate array is not GT or the result is not Gog
    """
    n = y.n
    grid = y.grid()
    for i, j in reversed(_scan_order(n)):
        if _is_inversion(grid, i, j):
            _shift(grid, (i, j), n, +1)
            if not is_gt_grid(n, grid):
                raise NotInvertibleError(f"intermediate array is not GT after restoring ({i},{j})")
    x = GTTriangle.from_grid(n, grid)
    if not is_gog(x):
        raise NotInvertibleError("restored triangle is not Gog")
    return x
