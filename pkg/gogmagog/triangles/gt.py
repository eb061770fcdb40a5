"""
Gelfand-Tsetlin triangles: construction, indexing and the entrywise lattice.
"""

from typing import Callable, Sequence

from ..core.errors import SizeMismatchError
from ..core.models import GTTriangle


def make_triangle(n: int, rows: Sequence[Sequence[int]]) -> GTTriangle:
    """
    Build a validated triangle from bottom-up rows.

    Args:
        n: Size of the triangle
        rows: n rows, row i holding X_{i,1..i}

    Returns:
        The triangle

    Raises:
        ShapeError: row count or row lengths are wrong
        DomainError: an entry is below 1
        OrderError: the first violated interlacing inequality (scan i, then j)
    """
    return GTTriangle(n=n, rows=tuple(tuple(row) for row in rows))


def entry(t: GTTriangle, i: int, j: int) -> int:
    """X_{i,j}; CellIndexError unless n >= i >= j >= 1."""
    return t.entry(i, j)


def constant_triangle(n: int, value: int = 1) -> GTTriangle:
    """Triangle with every entry equal to value."""
    return GTTriangle.model_construct(n=n, rows=tuple((value,) * i for i in range(1, n + 1)))


def identity_triangle(n: int) -> GTTriangle:
    """The minimum Gog triangle X_{i,j} = j."""
    return GTTriangle.model_construct(n=n, rows=tuple(tuple(range(1, i + 1)) for i in range(1, n + 1)))


def maximum_gog_triangle(n: int) -> GTTriangle:
    """The maximum Gog triangle X_{i,j} = n - i + j."""
    return GTTriangle.model_construct(
        n=n, rows=tuple(tuple(n - i + j for j in range(1, i + 1)) for i in range(1, n + 1))
    )


def _check_sizes(a: GTTriangle, b: GTTriangle) -> None:
    if a.n != b.n:
        raise SizeMismatchError(f"sizes differ: {a.n} and {b.n}")


def leq(a: GTTriangle, b: GTTriangle) -> bool:
    """Entrywise order: a <= b iff every X_{i,j}(a) <= X_{i,j}(b)."""
    _check_sizes(a, b)
    return all(x <= y for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb))


def _entrywise(a: GTTriangle, b: GTTriangle, pick: Callable[[int, int], int]) -> GTTriangle:
    _check_sizes(a, b)
    rows = [[pick(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)]
    return make_triangle(a.n, rows)


def join(a: GTTriangle, b: GTTriangle) -> GTTriangle:
    """Entrywise maximum; revalidated."""
    return _entrywise(a, b, max)


def meet(a: GTTriangle, b: GTTriangle) -> GTTriangle:
    """Entrywise minimum; revalidated."""
    return _entrywise(a, b, min)
