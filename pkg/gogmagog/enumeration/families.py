"""
Exhaustive generators for every family and shape, plus counting.

Triangle streams are sorted by key (concatenated rows, bottom-up). A prefix
restricts a stream to objects whose key starts with it; the prefixes
(v,) for v = 1..n partition every stream.
"""

import logging
from typing import Iterable, Iterator, Sequence, TypeVar

from ..core.config import settings
from ..core.errors import NotInFamilyError
from ..core.models import (
    Family,
    GTTriangle,
    Grid,
    LeftTrapezoid,
    PartialTriangle,
    Pentagon,
    RightTrapezoid,
    Shape,
    ShapeKind,
)
from ..triangles.classes import is_gogam_by_inequality
from ..triangles.schutzenberger import schutzenberger
from ..triangles.shapes import (
    cut_left,
    cut_pentagon,
    cut_right,
    is_pentagon_member,
    is_trapezoid_member,
)
from .engine import (
    backtrack,
    enumerate_gt,
    full_region,
    grid_rows,
    interlacing_bounds,
    triangle_cells,
)

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=PartialTriangle)


def _with_prefix(objects: Iterable[T], prefix: Sequence[int]) -> Iterator[T]:
    prefix = tuple(prefix)
    size = len(prefix)
    for obj in objects:
        if obj.key[:size] == prefix:
            yield obj


# ==============================================================================
# Triangles
# ==============================================================================

def enumerate_gog(n: int, prefix: Sequence[int] = ()) -> Iterator[GTTriangle]:
    """Every size-n Gog triangle once, in key order."""
    bounds = interlacing_bounds(n, full_region, strict=True)
    for grid in backtrack(n, triangle_cells(n), bounds, prefix):
        yield GTTriangle.model_construct(n=n, rows=grid_rows(n, grid))


def _magog_bounds(grid: Grid, i: int, j: int) -> tuple[int, int]:
    lo, hi = 1, i
    if j >= 2:
        lo = max(lo, grid[i - 1][j - 1], grid[i][j - 1])
    if j <= i - 1:
        hi = grid[i - 1][j]
    return lo, hi


def enumerate_magog(n: int, prefix: Sequence[int] = ()) -> Iterator[GTTriangle]:
    """Every size-n Magog triangle once, in key order."""
    for grid in backtrack(n, triangle_cells(n), _magog_bounds, prefix):
        yield GTTriangle.model_construct(n=n, rows=grid_rows(n, grid))


def _gogam_stream(n: int, method: str, prefix: Sequence[int] = ()) -> Iterator[GTTriangle]:
    """
    Size-n GOGAm triangles one at a time.

    "inequality" filters GT triangles with entries <= n and keeps key order;
    "schutzenberger" maps Magog triangles through S in Magog order.
    """
    if method == "inequality":
        yield from (t for t in enumerate_gt(n, n, prefix) if is_gogam_by_inequality(t))
        return
    yield from _with_prefix((schutzenberger(t) for t in enumerate_magog(n)), prefix)


def gogam_triangles(n: int, method: str = "schutzenberger") -> tuple[GTTriangle, ...]:
    """All size-n GOGAm triangles, sorted by key."""
    found = tuple(sorted(_gogam_stream(n, method), key=lambda t: t.key))
    logger.debug("generated %d GOGAm triangles of size %d via %s", len(found), n, method)
    return found


def enumerate_gogam(n: int, prefix: Sequence[int] = (),
                    method: str | None = None) -> Iterator[GTTriangle]:
    """Every size-n GOGAm triangle once, in key order."""
    method = method or settings.gogam_method
    if method == "inequality":
        yield from _gogam_stream(n, method, prefix)
        return
    yield from sorted(_gogam_stream(n, method, prefix), key=lambda t: t.key)


def count_gogam_streaming(n: int, prefix: Sequence[int] = (), method: str | None = None) -> int:
    """
    Count GOGAm triangles without holding them: S images of Magog triangles
    (or GT candidates, with the inequality method) that pass the GOGAm
    inequalities.
    """
    method = method or settings.gogam_method
    return sum(1 for t in _gogam_stream(n, method, prefix) if is_gogam_by_inequality(t))


def enumerate_triangles(family: Family, n: int, prefix: Sequence[int] = ()) -> Iterator[GTTriangle]:
    if family == Family.GOG:
        return enumerate_gog(n, prefix)
    if family == Family.MAGOG:
        return enumerate_magog(n, prefix)
    return enumerate_gogam(n, prefix)


# ==============================================================================
# Trapezoids and pentagons
# ==============================================================================

def _partial_rows(grid: Grid, spans: list[range]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(grid[i][j] for j in span) for i, span in enumerate(spans, start=1))


def _dedup_cuts(triangles: Iterable[GTTriangle], cut) -> list:
    seen = {}
    for t in triangles:
        piece = cut(t)
        seen.setdefault(piece.key, piece)
    return [seen[key] for key in sorted(seen)]


def _gogam_trapezoids(n: int, k: int, prefix: Sequence[int], cut, model: type) -> Iterator:
    """
    GOGAm trapezoids: deduplicated cuts up to the triangle cap, otherwise
    GT candidates with entries <= n kept when their completion is GOGAm.
    """
    if n <= settings.max_triangle_n:
        pieces = _dedup_cuts(_gogam_stream(n, settings.gogam_method), lambda t: cut(t, k))
        yield from _with_prefix(pieces, prefix)
        return
    logger.debug("candidate search for GOGAm %s trapezoid (%d,%d)", model.side.value, n, k)
    spans = [model.model_construct(n=n, k=k, rows=()).span(i) for i in range(1, n + 1)]
    cells = [(i, j) for i, span in enumerate(spans, start=1) for j in span]
    region = lambda i, j: i >= 1 and j in spans[i - 1]
    bounds = interlacing_bounds(n, region, strict=False)
    for grid in backtrack(n, cells, bounds, prefix):
        candidate = model.model_construct(n=n, k=k, rows=_partial_rows(grid, spans))
        if is_trapezoid_member(Family.GOGAM, candidate):
            yield candidate


def enumerate_left_trapezoids(family: Family, n: int, k: int,
                              prefix: Sequence[int] = ()) -> Iterator[LeftTrapezoid]:
    """Every distinct (n, k) left trapezoid of the family, in key order."""
    if family == Family.GOG:
        spans = [range(1, min(i, k) + 1) for i in range(1, n + 1)]
        region = lambda i, j: 1 <= j <= min(i, k)
        cells = [(i, j) for i, span in enumerate(spans, start=1) for j in span]
        bounds = interlacing_bounds(n, region, strict=True)
        for grid in backtrack(n, cells, bounds, prefix):
            yield LeftTrapezoid.model_construct(n=n, k=k, rows=_partial_rows(grid, spans))
    elif family == Family.GOGAM:
        yield from _gogam_trapezoids(n, k, prefix, cut_left, LeftTrapezoid)
    else:
        raise NotInFamilyError("left Magog trapezoids are not defined")


def enumerate_right_trapezoids(family: Family, n: int, k: int,
                               prefix: Sequence[int] = ()) -> Iterator[RightTrapezoid]:
    """Every distinct (n, k) right trapezoid of the family, in key order."""
    spans = [range(max(1, i - k + 1), i + 1) for i in range(1, n + 1)]
    cells = [(i, j) for i, span in enumerate(spans, start=1) for j in span]
    region = lambda i, j: 1 <= j <= i and i - j <= k - 1
    if family == Family.GOG:
        bounds = interlacing_bounds(n, region, strict=True)
    elif family == Family.MAGOG:
        inner = interlacing_bounds(n, region, strict=False)

        def bounds(grid: Grid, i: int, j: int) -> tuple[int, int]:
            lo, hi = inner(grid, i, j)
            if i == j:
                hi = min(hi, i)
            return lo, hi
    else:
        yield from _gogam_trapezoids(n, k, prefix, cut_right, RightTrapezoid)
        return
    for grid in backtrack(n, cells, bounds, prefix):
        yield RightTrapezoid.model_construct(n=n, k=k, rows=_partial_rows(grid, spans))


def enumerate_pentagons(family: Family, n: int, k: int, l: int, m: int,
                        prefix: Sequence[int] = ()) -> Iterator[Pentagon]:
    """
    Every distinct (n, k, l, m) pentagon of the family, in key order.

    Up to the triangle cap, pentagons are deduplicated cuts of the family's
    triangles; above it, candidates satisfying the interlacing inequalities
    are kept when their minimal completion lies in the family.
    """
    if family == Family.MAGOG:
        raise NotInFamilyError("Magog pentagons are not defined")
    if n <= settings.max_triangle_n:
        triangles = enumerate_gog(n) if family == Family.GOG else _gogam_stream(n, settings.gogam_method)
        pieces = _dedup_cuts(triangles, lambda t: cut_pentagon(t, k, l, m))
        yield from _with_prefix(pieces, prefix)
        return
    logger.debug("candidate search for %s pentagon (%d,%d,%d,%d)", family.value, n, k, l, m)
    spans = [range(max(1, i - l + 1), min(i, k) + 1) for i in range(1, min(n, m) + 1)]
    region = lambda i, j: 1 <= i <= min(n, m) and max(1, i - l + 1) <= j <= min(i, k)
    cells = [(i, j) for i, span in enumerate(spans, start=1) for j in span]
    bounds = interlacing_bounds(n, region, strict=family == Family.GOG)
    for grid in backtrack(n, cells, bounds, prefix):
        candidate = Pentagon.model_construct(n=n, k=k, l=l, m=m, rows=_partial_rows(grid, spans))
        if is_pentagon_member(family, candidate):
            yield candidate


# ==============================================================================
# Dispatch and counting
# ==============================================================================

def stream(family: Family, shape: Shape, prefix: Sequence[int] = ()) -> Iterator[PartialTriangle]:
    """Objects of the family with the given shape."""
    if shape.kind == ShapeKind.TRIANGLE:
        return enumerate_triangles(family, shape.n, prefix)
    if shape.kind == ShapeKind.LEFT:
        return enumerate_left_trapezoids(family, shape.n, shape.k, prefix)
    if shape.kind == ShapeKind.RIGHT:
        return enumerate_right_trapezoids(family, shape.n, shape.k, prefix)
    return enumerate_pentagons(family, shape.n, shape.k, shape.l, shape.m, prefix)


def count(family: Family, shape: Shape, prefix: Sequence[int] = ()) -> int:
    """Cardinality of stream(family, shape, prefix)."""
    if shape.kind == ShapeKind.TRIANGLE and family == Family.GOGAM:
        return count_gogam_streaming(shape.n, prefix)
    return sum(1 for _ in stream(family, shape, prefix))


def partitions(shape: Shape) -> list[tuple[int, ...]]:
    """Disjoint prefixes covering every stream of the shape: the bottom entry's value."""
    return [(value,) for value in range(1, shape.n + 1)]
