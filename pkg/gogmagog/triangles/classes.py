"""
Family membership for Gog, Magog and GOGAm triangles, and the vertical reflection.
"""

import itertools
from functools import lru_cache

from ..core.errors import NotGogError
from ..core.models import Family, GTTriangle
from .schutzenberger import schutzenberger


def is_gog(t: GTTriangle) -> bool:
    """Strictly increasing rows and top row 1, 2, ..., n."""
    if t.rows[-1] != tuple(range(1, t.n + 1)):
        return False
    return all(row[x] < row[x + 1] for row in t.rows[:-1] for x in range(len(row) - 1))


def is_magog(t: GTTriangle) -> bool:
    """Every diagonal head satisfies X_{j,j} <= j."""
    return all(t.rows[j - 1][j - 1] <= j for j in range(1, t.n + 1))


@lru_cache(maxsize=None)
def gogam_index_sequences(n: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """
    All (k, (n, j_1, ..., j_{n-k})) with n > j_1 > ... > j_{n-k} >= 1.

    There are 2^(n-1) - 1 of them.
    """
    sequences = []
    for k in range(1, n):
        for tail in itertools.combinations(range(n - 1, 0, -1), n - k):
            sequences.append((k, (n, *tail)))
    return tuple(sequences)


def gogam_inequality_sum(grid: list[list[int]], n: int, js: tuple[int, ...]) -> int:
    """Left-hand side of the GOGAm inequality for one index sequence."""
    length = len(js) - 1
    total = 0
    for i in range(length):
        total += grid[js[i] + i][js[i]] - grid[js[i + 1] + i][js[i + 1]]
    return total + grid[js[length] + length][js[length]]


def is_gogam_by_inequality(t: GTTriangle) -> bool:
    """Direct test of the GOGAm inequality family."""
    n = t.n
    grid = t.grid()
    if grid[n][n] > n:
        return False
    for k, js in gogam_index_sequences(n):
        if gogam_inequality_sum(grid, n, js) > k:
            return False
    return True


def is_gogam(t: GTTriangle) -> bool:
    """True iff the Schützenberger image is Magog."""
    return is_magog(schutzenberger(t))


def is_member(family: Family, t: GTTriangle) -> bool:
    """Dispatch membership on the family."""
    if family == Family.GOG:
        return is_gog(t)
    if family == Family.MAGOG:
        return is_magog(t)
    return is_gogam(t)


def reflect(t: GTTriangle) -> GTTriangle:
    """
    Vertical reflection X~_{i,j} = n + 1 - X_{i,i+1-j} of a Gog triangle.

    Raises:
        NotGogError: t is not a Gog triangle
    """
    if not is_gog(t):
        raise NotGogError("reflection is defined on Gog triangles")
    n = t.n
    rows = tuple(tuple(n + 1 - v for v in reversed(row)) for row in t.rows)
    return GTTriangle.model_construct(n=n, rows=rows)
