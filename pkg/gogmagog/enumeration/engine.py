"""
Cell-by-cell backtracking over triangular arrays.

Cells are placed bottom-up, left to right. Each cell's feasible interval is
computed from neighbours already placed, so every yielded grid satisfies the
constraints and grids come out in lexicographic order of their keys.
"""

from typing import Callable, Iterator, Sequence

from ..core.models import Cell, GTTriangle, Grid

Bounds = Callable[[Grid, int, int], tuple[int, int]]
Region = Callable[[int, int], bool]


def backtrack(n: int, cells: Sequence[Cell], bounds: Bounds,
              prefix: Sequence[int] = ()) -> Iterator[Grid]:
    """
    Yield every assignment of the cells within their bounds.

    The same grid object is yielded each time; callers copy what they keep.

    Args:
        n: Triangle size (grid dimensions)
        cells: Placement order
        bounds: (grid, i, j) -> (lo, hi), inclusive
        prefix: Forced values for the first cells
    """
    grid: Grid = [[]] + [[0] * (i + 2) for i in range(1, n + 1)]
    last = len(cells)

    def place(index: int) -> Iterator[Grid]:
        if index == last:
            yield grid
            return
        i, j = cells[index]
        lo, hi = bounds(grid, i, j)
        if index < len(prefix):
            if lo <= prefix[index] <= hi:
                grid[i][j] = prefix[index]
                yield from place(index + 1)
            return
        for value in range(lo, hi + 1):
            grid[i][j] = value
            yield from place(index + 1)

    yield from place(0)


def interlacing_bounds(n: int, region: Region, strict: bool, ceiling: int | None = None) -> Bounds:
    """
    Bounds from the GT inequalities restricted to a region.

    With strict, rows increase strictly and j <= X_{i,j} <= n - i + j (Gog);
    otherwise 1 <= X_{i,j} <= ceiling.
    """
    top = n if ceiling is None else ceiling

    def bounds(grid: Grid, i: int, j: int) -> tuple[int, int]:
        if strict:
            lo, hi = j, n - i + j
        else:
            lo, hi = 1, top
        if j >= 2:
            if region(i - 1, j - 1):
                lo = max(lo, grid[i - 1][j - 1])
            if region(i, j - 1):
                lo = max(lo, grid[i][j - 1] + (1 if strict else 0))
        if j <= i - 1 and region(i - 1, j):
            hi = min(hi, grid[i - 1][j])
        return lo, hi

    return bounds


def triangle_cells(n: int) -> list[Cell]:
    return [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]


def full_region(i: int, j: int) -> bool:
    return 1 <= j <= i


def grid_rows(n: int, grid: Grid) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(grid[i][1:i + 1]) for i in range(1, n + 1))


def enumerate_gt(n: int, max_entry: int, prefix: Sequence[int] = ()) -> Iterator[GTTriangle]:
    """Every size-n GT triangle with entries in [1, max_entry], in key order."""
    bounds = interlacing_bounds(n, full_region, strict=False, ceiling=max_entry)
    for grid in backtrack(n, triangle_cells(n), bounds, prefix):
        yield GTTriangle.model_construct(n=n, rows=grid_rows(n, grid))
