"""
Trapezoids and pentagons: cuts, membership and canonical (minimal) completions.

Every completion returns the least triangle of the family extending the
partial array, or raises NotExtensibleError naming the first failing cell.
"""

import logging

from ..core.errors import NotExtensibleError, NotInFamilyError, ShapeError
from ..core.models import (
    Cell,
    Family,
    GTTriangle,
    Grid,
    LeftTrapezoid,
    PartialTriangle,
    Pentagon,
    RightTrapezoid,
    first_violation,
)
from .classes import is_gog, is_gogam, is_magog

logger = logging.getLogger(__name__)


# ==============================================================================
# Cuts
# ==============================================================================

def _check_parameter(name: str, value: int, n: int) -> None:
    if not 1 <= value <= n:
        raise ShapeError(f"{name} must lie in [1, {n}], got {value}")


def cut_left(t: GTTriangle, k: int) -> LeftTrapezoid:
    """The k leftmost NW-SE diagonals of t."""
    _check_parameter("k", k, t.n)
    rows = tuple(row[:min(i, k)] for i, row in enumerate(t.rows, start=1))
    return LeftTrapezoid.model_construct(n=t.n, k=k, rows=rows)


def cut_right(t: GTTriangle, k: int) -> RightTrapezoid:
    """The k rightmost SW-NE diagonals of t."""
    _check_parameter("k", k, t.n)
    rows = tuple(row[max(0, i - k):] for i, row in enumerate(t.rows, start=1))
    return RightTrapezoid.model_construct(n=t.n, k=k, rows=rows)


def cut_pentagon(t: GTTriangle, k: int, l: int, m: int) -> Pentagon:
    """Intersection of the k left diagonals, the l right diagonals and the m bottom rows."""
    for name, value in (("k", k), ("l", l), ("m", m)):
        _check_parameter(name, value, t.n)
    rows = []
    for i in range(1, min(t.n, m) + 1):
        start, stop = max(1, i - l + 1), min(i, k)
        rows.append(t.rows[i - 1][start - 1:stop] if start <= stop else ())
    return Pentagon.model_construct(n=t.n, k=k, l=l, m=m, rows=tuple(rows))


def reflect_trapezoid(tr: LeftTrapezoid | RightTrapezoid) -> LeftTrapezoid | RightTrapezoid:
    """Cell (i, j) goes to (i, i + 1 - j) with value n + 1 - X_{i,j}; sides swap."""
    rows = tuple(tuple(tr.n + 1 - v for v in reversed(row)) for row in tr.rows)
    target = RightTrapezoid if isinstance(tr, LeftTrapezoid) else LeftTrapezoid
    return target(n=tr.n, k=tr.k, rows=rows)


# ==============================================================================
# Direct membership
# ==============================================================================

def _gog_conditions(tr: PartialTriangle) -> bool:
    """GT on stored cells, strictly increasing rows and j <= X_{i,j} <= n - i + j."""
    if tr.first_order_violation() is not None:
        return False
    values = tr.cell_map()
    for (i, j), x in values.items():
        if not j <= x <= tr.n - i + j:
            return False
        right = values.get((i, j + 1))
        if right is not None and right <= x:
            return False
    return True


def is_left_gog(tr: LeftTrapezoid) -> bool:
    """True iff tr extends to some Gog triangle."""
    return _gog_conditions(tr)


def is_right_gog(tr: RightTrapezoid) -> bool:
    """True iff tr extends to some Gog triangle."""
    return _gog_conditions(tr)


def is_right_magog(tr: RightTrapezoid) -> bool:
    """GT on stored cells and X_{j,j} <= j."""
    if tr.first_order_violation() is not None:
        return False
    return all(tr.get(j, j) <= j for j in range(1, tr.n + 1))


def is_left_gogam(tr: LeftTrapezoid) -> bool:
    """True iff the canonical completion is GOGAm."""
    try:
        complete_gogam_left(tr)
    except NotExtensibleError:
        return False
    return True


def is_right_gogam(tr: RightTrapezoid) -> bool:
    """True iff the 1-filled completion is GOGAm."""
    try:
        complete_gogam_right(tr)
    except NotExtensibleError:
        return False
    return True


def is_trapezoid_member(family: Family, tr: LeftTrapezoid | RightTrapezoid) -> bool:
    """Dispatch trapezoid membership; Magog left trapezoids are not defined."""
    if isinstance(tr, LeftTrapezoid):
        if family == Family.GOG:
            return is_left_gog(tr)
        if family == Family.GOGAM:
            return is_left_gogam(tr)
        raise NotInFamilyError("left Magog trapezoids are not defined")
    if family == Family.GOG:
        return is_right_gog(tr)
    if family == Family.MAGOG:
        return is_right_magog(tr)
    return is_right_gogam(tr)


def is_pentagon_member(family: Family, p: Pentagon) -> bool:
    """True iff the pentagon extends to a triangle of the family."""
    try:
        complete_pentagon(family, p)
    except NotExtensibleError:
        return False
    return True


# ==============================================================================
# Completions
# ==============================================================================

def _empty_grid(n: int) -> Grid:
    return [[]] + [[0] * (i + 1) for i in range(1, n + 1)]


def _finish(n: int, grid: Grid, family: Family, what: str) -> GTTriangle:
    """Validate a filled grid against the family."""
    violation = first_violation(n, grid)
    if violation is not None:
        i, j, direction = violation
        raise NotExtensibleError(f"{what}: GT inequality fails at ({i},{j}) [{direction}]", (i, j))
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            if grid[i][j] < 1:
                raise NotExtensibleError(f"{what}: entry below 1 at ({i},{j})", (i, j))
    t = GTTriangle.from_grid(n, grid)
    checks = {Family.GOG: is_gog, Family.MAGOG: is_magog, Family.GOGAM: is_gogam}
    if not checks[family](t):
        raise NotExtensibleError(f"{what}: completion is not {family.value}")
    return t


def _load(tr: PartialTriangle, grid: Grid) -> None:
    for (i, j), value in tr.cell_map().items():
        grid[i][j] = value


def minimal_extension(n: int, fixed: dict[Cell, int], strict: bool) -> Grid:
    """
    Least solution of the lower-bound constraints of GT triangles.

    Unknown cells start at their floor (j when strict, else 1) and are raised to
    max(X_{i+1,j}, X_{i-1,j-1}, X_{i,j-1} + 1 if strict) until nothing moves.
    The result satisfies every upper-bound constraint iff some extension exists;
    callers validate it.

    Args:
        n: Triangle size
        fixed: Known cells
        strict: Require strictly increasing rows (Gog)

    Returns:
        A 1-based grid
    """
    grid = _empty_grid(n)
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            grid[i][j] = fixed.get((i, j), j if strict else 1)
    changed = True
    while changed:
        changed = False
        for i in range(n, 0, -1):
            for j in range(1, i + 1):
                if (i, j) in fixed:
                    continue
                low = grid[i][j]
                if i < n:
                    low = max(low, grid[i + 1][j])
                if j >= 2:
                    low = max(low, grid[i - 1][j - 1])
                    if strict:
                        low = max(low, grid[i][j - 1] + 1)
                if low > grid[i][j]:
                    grid[i][j] = low
                    changed = True
    return grid


def complete_gog_right(tr: RightTrapezoid) -> GTTriangle:
    """Minimal Gog extension: X_{i,j} = j for i >= j + k."""
    grid = _empty_grid(tr.n)
    for i in range(1, tr.n + 1):
        for j in range(1, i + 1):
            grid[i][j] = j
    _load(tr, grid)
    return _finish(tr.n, grid, Family.GOG, "right Gog completion")


def complete_gog_left(tr: LeftTrapezoid) -> GTTriangle:
    """Minimal Gog extension: X_{i,j} = max_p (X_{i-p,k} + j - k - p), 0 <= p <= j - k."""
    n, k = tr.n, tr.k
    grid = _empty_grid(n)
    _load(tr, grid)
    for i in range(k + 1, n + 1):
        for j in range(k + 1, i + 1):
            grid[i][j] = max(grid[i - p][k] + j - k - p for p in range(j - k + 1))
    return _finish(n, grid, Family.GOG, "left Gog completion")


def complete_magog_right(tr: RightTrapezoid) -> GTTriangle:
    """Fill the NW triangle with 1s."""
    grid = _empty_grid(tr.n)
    for i in range(1, tr.n + 1):
        for j in range(1, i + 1):
            grid[i][j] = 1
    _load(tr, grid)
    return _finish(tr.n, grid, Family.MAGOG, "right Magog completion")


def complete_gogam_right(tr: RightTrapezoid) -> GTTriangle:
    """Minimal GOGAm extension: 1s for n >= i >= j + k."""
    grid = _empty_grid(tr.n)
    for i in range(1, tr.n + 1):
        for j in range(1, i + 1):
            grid[i][j] = 1
    _load(tr, grid)
    return _finish(tr.n, grid, Family.GOGAM, "right GOGAm completion")


def complete_gogam_left(tr: LeftTrapezoid) -> GTTriangle:
    """Minimal GOGAm extension: constant SW-NE diagonals, X_{i,j} = X_{i-j+k,k}."""
    n, k = tr.n, tr.k
    grid = _empty_grid(n)
    _load(tr, grid)
    for i in range(k + 1, n + 1):
        for j in range(k + 1, i + 1):
            grid[i][j] = grid[i - j + k][k]
    return _finish(n, grid, Family.GOGAM, "left GOGAm completion")


def complete_pentagon(family: Family, p: Pentagon) -> GTTriangle:
    """
    Minimal extension of a Gog or GOGAm pentagon.

    Raises:
        NotInFamilyError: Magog pentagons are not defined
        NotExtensibleError: no extension exists
    """
    if family == Family.MAGOG:
        raise NotInFamilyError("Magog pentagons are not defined")
    grid = minimal_extension(p.n, p.cell_map(), strict=family == Family.GOG)
    return _finish(p.n, grid, family, f"{family.value} pentagon completion")
