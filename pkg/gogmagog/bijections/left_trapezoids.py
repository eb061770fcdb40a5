"""
Bijections between left Gog and left GOGAm trapezoids with one or two diagonals.
"""

from ..core.errors import GogMagogError, NotInvertibleError, NotLeftGogamError, NotLeftGogError
from ..core.models import LeftTrapezoid
from ..triangles.shapes import is_left_gog, is_left_gogam


def left1_gog_to_gogam(tr: LeftTrapezoid) -> LeftTrapezoid:
    """(n, 1) trapezoids of both families are the same columns; the map is the identity."""
    if tr.k != 1 or not is_left_gog(tr):
        raise NotLeftGogError("expected an (n, 1) left Gog trapezoid")
    return tr


def left1_gogam_to_gog(tr: LeftTrapezoid) -> LeftTrapezoid:
    if tr.k != 1 or not is_left_gogam(tr):
        raise NotLeftGogamError("expected an (n, 1) left GOGAm trapezoid")
    return tr


def is_left_gogam_two(tr: LeftTrapezoid) -> bool:
    """
    Direct test for (n, 2) left GOGAm trapezoids.

    GT on the stored cells, X_{i,2} <= n - i + 2 and
    X_{i,2} - X_{i-1,1} + X_{i,1} <= n - i + 1 for 2 <= i <= n.
    """
    if tr.k != 2 or tr.first_order_violation() is not None:
        return False
    n = tr.n
    for i in range(2, n + 1):
        x1, x2 = tr.rows[i - 1]
        if x2 > n - i + 2:
            return False
        if x2 - tr.rows[i - 2][0] + x1 > n - i + 1:
            return False
    return True


def _columns(tr: LeftTrapezoid) -> tuple[list[int], list[int]]:
    first = [0] + [row[0] for row in tr.rows]
    second = [0, 0] + [row[1] for row in tr.rows[1:]]
    return first, second


def _from_columns(n: int, first: list[int], second: list[int]) -> LeftTrapezoid:
    rows = [(first[1],)] + [(first[i], second[i]) for i in range(2, n + 1)]
    return LeftTrapezoid(n=n, k=2, rows=tuple(rows))


def column_inversions(column: list[int], n: int) -> list[int]:
    """Indices i < n with column[i] = column[i + 1], in decreasing order."""
    return [i for i in range(n - 1, 0, -1) if column[i] == column[i + 1]]


def left2_gog_to_gogam(tr: LeftTrapezoid) -> LeftTrapezoid:
    """
    Scan the inversions of the first diagonal from NW (largest i) to SE.

    For each inversion i, with m the largest index such that X_{m,2} = X_{i+1,2},
    column-1 entries move down one step for m - 1 >= row > i and column-2
    entries drop by one for m >= row >= i + 1.

    Raises:
        NotLeftGogError: tr is not an (n, 2) left Gog trapezoid
    """
    if tr.k != 2 or not is_left_gog(tr):
        raise NotLeftGogError("expected an (n, 2) left Gog trapezoid")
    n = tr.n
    first, second = _columns(tr)
    for target in column_inversions(first, n):
        reference = second[target + 1]
        m = max(i for i in range(target + 1, n + 1) if second[i] == reference)
        previous = first[:]
        for i in range(target + 1, m):
            first[i] = previous[i + 1]
        for i in range(target + 1, m + 1):
            second[i] -= 1
    return _from_columns(n, first, second)


def left2_gogam_to_gog(tr: LeftTrapezoid) -> LeftTrapezoid:
    """
    Inverse of left2_gog_to_gogam.

    Inversions of the first diagonal are taken from the input and processed
    from the SE end. For each inversion i, with p the smallest index such
    that Y_{p,2} = Y_{i+1,2}, column-1 entries move up one step for
    i >= row >= p and column-2 entries grow by one for i + 1 >= row >= p.

    Raises:
        NotLeftGogamError: tr is not an (n, 2) left GOGAm trapezoid
        NotInvertibleError: the result is not a left Gog trapezoid
    """
    if tr.k != 2 or not is_left_gogam(tr):
        raise NotLeftGogamError("expected an (n, 2) left GOGAm trapezoid")
    n = tr.n
    first, second = _columns(tr)
    for target in reversed(column_inversions(first, n)):
        reference = second[target + 1]
        p = min(i for i in range(2, n + 1) if second[i] == reference)
        previous = first[:]
        for i in range(p, target + 1):
            first[i] = previous[i - 1]
        for i in range(p, target + 2):
            second[i] += 1
    try:
        result = _from_columns(n, first, second)
    except GogMagogError as exc:
        raise NotInvertibleError(f"inverse left2 map produced an invalid array: {exc}") from exc
    if not is_left_gog(result):
        raise NotInvertibleError("inverse left2 map did not produce a left Gog trapezoid")
    return result
