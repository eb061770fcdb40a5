"""Enumeration module - backtracking engine and family generators."""

from .engine import backtrack, enumerate_gt, interlacing_bounds
from .families import (
    count,
    count_gogam_streaming,
    enumerate_gog,
    enumerate_gogam,
    enumerate_left_trapezoids,
    enumerate_magog,
    enumerate_pentagons,
    enumerate_right_trapezoids,
    enumerate_triangles,
    gogam_triangles,
    partitions,
    stream,
)

__all__ = [
    "backtrack",
    "enumerate_gt",
    "interlacing_bounds",
    "count",
    "count_gogam_streaming",
    "enumerate_gog",
    "enumerate_gogam",
    "enumerate_left_trapezoids",
    "enumerate_magog",
    "enumerate_pentagons",
    "enumerate_right_trapezoids",
    "enumerate_triangles",
    "gogam_triangles",
    "partitions",
    "stream",
]
