"""
Achievable (inversion, coinversion) pairs of Gog triangles.

A_n is the union over k in [0, n-1] of the sets
{(i, j) : i >= T(k), j >= T(n-k-1), i + j <= T(n-1)}, T(x) = x(x+1)/2.
"""

import logging
from typing import Iterator

from ..core.errors import RangeError
from ..core.models import GTTriangle, is_gt_grid
from ..enumeration.families import enumerate_gog
from ..triangles.classes import is_gog
from .statistics import mu, nu

logger = logging.getLogger(__name__)


def triangular(x: int) -> int:
    return x * (x + 1) // 2


def diamond_set(n: int) -> set[tuple[int, int]]:
    """All (mu, nu) pairs reached by size-n Gog triangles."""
    if n < 1:
        raise RangeError(f"size must be positive, got {n}")
    top = triangular(n - 1)
    pairs = set()
    for k in range(n):
        low_mu, low_nu = triangular(k), triangular(n - k - 1)
        for i in range(low_mu, top - low_nu + 1):
            for j in range(low_nu, top - i + 1):
                pairs.add((i, j))
    return pairs


def corner_pairs(n: int) -> list[tuple[int, int]]:
    """(T(k), T(n-k-1)) for k = 0..n-1."""
    return [(triangular(k), triangular(n - k - 1)) for k in range(n)]


def corner_triangle(n: int, k: int) -> GTTriangle:
    """
    The unique Gog triangle with T(k) inversions and T(n-k-1) coinversions.

    X_{i,j} = j for j <= i - n + k, n + j - i for j >= k + 1, and
    n - k + 2j - i - 1 otherwise. Its bottom entry is n - k.

    Raises:
        RangeError: k outside [0, n-1]
    """
    if not 0 <= k <= n - 1:
        raise RangeError(f"k must lie in [0, {n - 1}], got {k}")
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, i + 1):
            if j <= i - n + k:
                row.append(j)
            elif j >= k + 1:
                row.append(n + j - i)
            else:
                row.append(n - k + 2 * j - i - 1)
        rows.append(tuple(row))
    return GTTriangle.model_construct(n=n, rows=tuple(rows))


def pp1_violations(n: int) -> list[tuple[int, int, int]]:
    """
    Members (l, m) of A_n and p in [0, n] with l < T(p) but m < T(n - p).

    The list is empty for every n; the harness reports it.
    """
    found = []
    for l, m in sorted(diamond_set(n)):
        for p in range(n + 1):
            if l < triangular(p) and m < triangular(n - p):
                found.append((l, m, p))
    return found


def _moves(t: GTTriangle) -> Iterator[GTTriangle]:
    """GT triangles obtained by copying a lower neighbour into one cell."""
    grid = t.grid()
    for i in range(1, t.n):
        for j in range(1, i + 1):
            for value in (grid[i + 1][j], grid[i + 1][j + 1]):
                if value == grid[i][j]:
                    continue
                changed = [list(row) for row in grid]
                changed[i][j] = value
                if is_gt_grid(t.n, changed):
                    yield GTTriangle.from_grid(t.n, changed)


def _greedy(n: int, l: int, m: int) -> GTTriangle | None:
    start_k = next(
        (k for k in range(n) if triangular(k) <= l and triangular(n - k - 1) <= m), None
    )
    if start_k is None:
        return None
    current = corner_triangle(n, start_k)
    current_mu, current_nu = mu(current), nu(current)
    while (current_mu, current_nu) != (l, m):
        for candidate in _moves(current):
            if not is_gog(candidate):
                continue
            cand_mu, cand_nu = mu(candidate), nu(candidate)
            if (
                current_mu <= cand_mu <= l
                and current_nu <= cand_nu <= m
                and cand_mu + cand_nu > current_mu + current_nu
            ):
                current, current_mu, current_nu = candidate, cand_mu, cand_nu
                break
        else:
            return None
    return current


def achieving_triangle(n: int, l: int, m: int) -> GTTriangle:
    """
    A Gog triangle with l inversions and m coinversions.

    Starts from a corner triangle and copies neighbours into cells while the
    counts stay below (l, m); when that stalls, scans every Gog triangle.

    Raises:
        RangeError: (l, m) is not in A_n
    """
    if (l, m) not in diamond_set(n):
        raise RangeError(f"({l},{m}) is not achievable for n={n}")
    found = _greedy(n, l, m)
    if found is not None:
        return found
    logger.debug("greedy witness stalled for n=%d (%d,%d); scanning", n, l, m)
    for t in enumerate_gog(n):
        if mu(t) == l and nu(t) == m:
            return t
    raise RangeError(f"no Gog triangle of size {n} has ({l},{m})")
