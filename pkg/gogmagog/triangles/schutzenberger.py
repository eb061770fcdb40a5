"""
Schützenberger involution on Gelfand-Tsetlin triangles.

s_k mirrors each entry of row k inside the interval allowed by rows k-1
and k+1. omega_j applies s_1, ..., s_j in that order and S applies
omega_{n-1} first and omega_1 last.
"""

import itertools

from ..core.errors import CellIndexError
from ..core.models import GTTriangle, Grid


def flip_row(grid: Grid, k: int) -> None:
    """Apply s_k in place on a 1-based grid (rows k-1, k, k+1 must exist where used)."""
    below = grid[k - 1] if k >= 2 else None
    above = grid[k + 1]
    row = grid[k]
    old = row[:]
    for j in range(1, k + 1):
        low = above[j]
        if below is not None and j >= 2:
            low = max(low, below[j - 1])
        high = above[j + 1]
        if below is not None and j <= k - 1:
            high = min(high, below[j])
        row[j] = low + high - old[j]


def _check_row(t: GTTriangle, k: int) -> None:
    if not 1 <= k <= t.n - 1:
        raise CellIndexError(f"row index {k} outside [1, {t.n - 1}]")


def s_k(t: GTTriangle, k: int) -> GTTriangle:
    """Elementary involution on row k."""
    _check_row(t, k)
    grid = t.grid()
    flip_row(grid, k)
    return GTTriangle.from_grid(t.n, grid)


def omega_j(t: GTTriangle, j: int) -> GTTriangle:
    """omega_j = s_j ... s_2 s_1: s_1 acts first."""
    _check_row(t, j)
    grid = t.grid()
    for k in range(1, j + 1):
        flip_row(grid, k)
    return GTTriangle.from_grid(t.n, grid)


def schutzenberger_grid(n: int, grid: Grid) -> None:
    """S in place: omega_{n-1} first, omega_1 last."""
    for j in range(n - 1, 0, -1):
        for k in range(1, j + 1):
            flip_row(grid, k)


def schutzenberger(t: GTTriangle) -> GTTriangle:
    """The Schützenberger involution S = omega_1 omega_2 ... omega_{n-1}."""
    grid = t.grid()
    schutzenberger_grid(t.n, grid)
    return GTTriangle.from_grid(t.n, grid)


def apply_word(t: GTTriangle, word: tuple[int, ...]) -> GTTriangle:
    """Apply s_{word[0]} first, then s_{word[1]}, and so on."""
    grid = t.grid()
    for k in word:
        _check_row(t, k)
        flip_row(grid, k)
    return GTTriangle.from_grid(t.n, grid)


def braid_witness(max_entry: int = 4) -> tuple[GTTriangle, GTTriangle, GTTriangle] | None:
    """
    First size-3 triangle (entries <= max_entry) where s1 s2 s1 and s2 s1 s2 differ.

    Returns:
        (t, s1 s2 s1 (t), s2 s1 s2 (t)) or None if every triangle satisfies the braid relation
    """
    from ..enumeration.engine import enumerate_gt

    for t in enumerate_gt(3, max_entry):
        left = apply_word(t, (1, 2, 1))
        right = apply_word(t, (2, 1, 2))
        if left != right:
            return t, left, right
    return None


def zero_padding_stable(t: GTTriangle, k: int) -> bool:
    """True when X_{i,j} = 1 for i - j >= k forces the same on S(t)."""
    image = schutzenberger(t)
    cells = [(i, j) for i, j in itertools.product(range(1, t.n + 1), repeat=2) if j <= i and i - j >= k]
    if not all(t.entry(i, j) == 1 for i, j in cells):
        return True
    return all(image.entry(i, j) == 1 for i, j in cells)
