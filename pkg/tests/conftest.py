"""
Shared fixtures and hypothesis strategies.
"""

import logging

import pytest
from hypothesis import strategies as st

from gogmagog.core.config import settings
from gogmagog.core.models import ASM, GTTriangle
from gogmagog.triangles.gt import make_triangle


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive sweeps at n = 7 and n = 8")


@pytest.fixture(autouse=True)
def detach_log_handlers():
    """Drop the CLI stderr handler so it never outlives the captured stream."""
    yield
    logger = logging.getLogger("gogmagog")
    for handler in list(logger.handlers):
        if getattr(handler, "_gogmagog", False):
            logger.removeHandler(handler)


@pytest.fixture
def inversion_example() -> GTTriangle:
    """Size-5 Gog triangle with inversions (2,2), (3,1), (4,1)."""
    return make_triangle(5, [[3], [2, 4], [1, 4, 5], [1, 3, 4, 5], [1, 2, 3, 4, 5]])


@pytest.fixture
def inversion_example_asm() -> ASM:
    """The alternating sign matrix of inversion_example, rows top-down."""
    return ASM(
        n=5,
        cells=(
            (0, 1, 0, 0, 0),
            (0, 0, 1, 0, 0),
            (1, -1, 0, 0, 1),
            (0, 1, -1, 1, 0),
            (0, 0, 1, 0, 0),
        ),
    )


@pytest.fixture
def restore_settings():
    """Snapshot settings and put them back after the test."""
    saved = settings.model_dump()
    yield settings
    for name, value in saved.items():
        setattr(settings, name, value)


@st.composite
def gt_triangles(draw, min_n: int = 1, max_n: int = 6, max_entry: int = 9, n: int | None = None):
    """Random GT triangle: a sorted top row, then each entry between its two upper neighbours."""
    size = n if n is not None else draw(st.integers(min_value=min_n, max_value=max_n))
    top = sorted(draw(st.lists(st.integers(1, max_entry), min_size=size, max_size=size)))
    rows = [tuple(top)]
    for i in range(size - 1, 0, -1):
        above = rows[-1]
        rows.append(tuple(draw(st.integers(above[j], above[j + 1])) for j in range(i)))
    return GTTriangle(n=size, rows=tuple(reversed(rows)))


@st.composite
def gt_pairs(draw, max_n: int = 5, max_entry: int = 7):
    """Two random GT triangles of the same size."""
    size = draw(st.integers(min_value=1, max_value=max_n))
    return (
        draw(gt_triangles(n=size, max_entry=max_entry)),
        draw(gt_triangles(n=size, max_entry=max_entry)),
    )
