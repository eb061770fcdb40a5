"""
Pydantic models for the Gog/Magog/GOGAm machinery.
Defines triangles, trapezoids, pentagons, alternating sign matrices and shapes.

Rows are stored bottom-up: row i (1-based) of a size-n triangle holds
X_{i,1}, ..., X_{i,i}, so an index (i, j) maps directly to rows[i - 1][j - 1].
"""

import json
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, ClassVar, Iterator
from pydantic import BaseModel, ConfigDict, model_validator

from .errors import CellIndexError, DomainError, OrderError, ShapeError


Cell = tuple[int, int]
InversionList = tuple[Cell, ...]
Grid = list[list[int]]


# ==============================================================================
# Enumerations
# ==============================================================================

class Family(str, Enum):
    """Triangle families."""
    GOG = "gog"
    MAGOG = "magog"
    GOGAM = "gogam"


class Side(str, Enum):
    """Which diagonals a trapezoid keeps."""
    LEFT = "left"
    RIGHT = "right"


class ShapeKind(str, Enum):
    """Kinds of partial arrays."""
    TRIANGLE = "triangle"
    LEFT = "left"
    RIGHT = "right"
    PENTAGON = "pentagon"


class Statistic(str, Enum):
    """Statistics tabulated by the harness."""
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    MU = "mu"
    NU = "nu"


# ==============================================================================
# Grid helpers
# ==============================================================================

def rows_to_grid(rows: tuple[tuple[int, ...], ...] | list[list[int]]) -> Grid:
    """Mutable 1-based copy: grid[i][j] = X_{i,j}."""
    return [[]] + [[0, *row] for row in rows]


def grid_to_rows(grid: Grid) -> tuple[tuple[int, ...], ...]:
    """Inverse of rows_to_grid."""
    return tuple(tuple(row[1:]) for row in grid[1:])


def first_violation(n: int, grid: Grid) -> tuple[int, int, str] | None:
    """First failing interlacing inequality, scanning i then j."""
    for i in range(1, n):
        upper = grid[i + 1]
        row = grid[i]
        for j in range(1, i + 1):
            if upper[j] > row[j]:
                return (i, j, "lower")
            if row[j] > upper[j + 1]:
                return (i, j, "upper")
    return None


def is_gt_grid(n: int, grid: Grid) -> bool:
    """True iff the grid satisfies every interlacing inequality and entries are >= 1."""
    if any(grid[i][j] < 1 for i in range(1, n + 1) for j in range(1, i + 1)):
        return False
    return first_violation(n, grid) is None


# ==============================================================================
# Partial triangular arrays
# ==============================================================================

class PartialTriangle(BaseModel, ABC):
    """
    A triangular array restricted to a region of cells.

    Subclasses define the region through span(i), the column indices
    stored in row i, and height, the number of stored rows.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    rows: tuple[tuple[int, ...], ...]

    @abstractmethod
    def span(self, i: int) -> range:
        """Column indices stored in row i."""

    @property
    def height(self) -> int:
        return self.n

    def _check_parameters(self) -> None:
        if self.n < 1:
            raise ShapeError(f"size must be positive, got {self.n}")

    @model_validator(mode="after")
    def _validate(self) -> "PartialTriangle":
        self._check_parameters()
        if len(self.rows) != self.height:
            raise ShapeError(f"expected {self.height} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != len(self.span(i)):
                raise ShapeError(
                    f"row {i} must hold {len(self.span(i))} entries, got {len(row)}"
                )
        for (i, j), value in self.cell_map().items():
            if value < 1:
                raise DomainError(f"entry X_{{{i},{j}}} = {value} is below 1")
        violation = self.first_order_violation()
        if violation is not None:
            raise OrderError(*violation)
        return self

    def first_order_violation(self) -> tuple[int, int, str] | None:
        """First failing interlacing inequality among stored cells."""
        values = self.cell_map()
        for i in range(1, self.height + 1):
            for j in self.span(i):
                x = values[(i, j)]
                below_left = values.get((i + 1, j))
                if below_left is not None and below_left > x:
                    return (i, j, "lower")
                above_right = values.get((i + 1, j + 1))
                if above_right is not None and x > above_right:
                    return (i, j, "upper")
        return None

    def cells(self) -> Iterator[Cell]:
        """Stored cells, bottom-up then left to right."""
        for i in range(1, self.height + 1):
            for j in self.span(i):
                yield (i, j)

    def cell_map(self) -> dict[Cell, int]:
        """Mapping (i, j) -> X_{i,j} over stored cells."""
        values = {}
        for i, row in enumerate(self.rows, start=1):
            start = self.span(i).start
            for offset, value in enumerate(row):
                values[(i, start + offset)] = value
        return values

    def get(self, i: int, j: int) -> int:
        """Entry X_{i,j}; CellIndexError outside the stored region."""
        if not 1 <= i <= self.height or j not in self.span(i):
            raise CellIndexError(f"cell ({i},{j}) is not stored")
        return self.rows[i - 1][j - self.span(i).start]

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.height and j in self.span(i)

    @property
    def key(self) -> tuple[int, ...]:
        """Concatenated rows, bottom-up; the enumeration order."""
        return tuple(value for row in self.rows for value in row)

    def _json_fields(self) -> dict[str, Any]:
        return {"n": self.n, "rows": [list(row) for row in self.rows]}

    def to_json(self) -> str:
        """Canonical compact JSON."""
        return json.dumps(self._json_fields(), separators=(",", ":"))

    def pretty(self) -> str:
        """Rows top-down, centred, one per line."""
        width = max((len(str(v)) for row in self.rows for v in row), default=1)
        lines = []
        for i in range(self.height, 0, -1):
            cells = {j: v for j, v in zip(self.span(i), self.rows[i - 1])}
            parts = [
                str(cells[j]).rjust(width) if j in cells else ".".rjust(width)
                for j in range(1, i + 1)
            ]
            lines.append(" " * ((self.n - i) * (width + 1) // 2) + " ".join(parts))
        return "\n".join(lines)


class GTTriangle(PartialTriangle):
    """Gelfand-Tsetlin triangle: X_{i+1,j} <= X_{i,j} <= X_{i+1,j+1}, entries >= 1."""

    def span(self, i: int) -> range:
        return range(1, i + 1)

    def entry(self, i: int, j: int) -> int:
        if not 1 <= j <= i <= self.n:
            raise CellIndexError(f"cell ({i},{j}) outside a size-{self.n} triangle")
        return self.rows[i - 1][j - 1]

    def first_order_violation(self) -> tuple[int, int, str] | None:
        return first_violation(self.n, self.grid())

    def grid(self) -> Grid:
        """Mutable 1-based copy of the entries."""
        return rows_to_grid(self.rows)

    @classmethod
    def from_grid(cls, n: int, grid: Grid, trusted: bool = True) -> "GTTriangle":
        """Build from a 1-based grid; trusted grids skip validation."""
        rows = grid_to_rows(grid)
        if trusted:
            return cls.model_construct(n=n, rows=rows)
        return cls(n=n, rows=rows)

    @classmethod
    def from_json(cls, text: str) -> "GTTriangle":
        data = json.loads(text)
        return cls(n=data["n"], rows=data["rows"])


class LeftTrapezoid(PartialTriangle):
    """The k leftmost NW-SE diagonals: cells j <= k."""

    side: ClassVar[Side] = Side.LEFT
    k: int

    def span(self, i: int) -> range:
        return range(1, min(i, self.k) + 1)

    def _check_parameters(self) -> None:
        super()._check_parameters()
        if not 1 <= self.k <= self.n:
            raise ShapeError(f"k must lie in [1, {self.n}], got {self.k}")

    def _json_fields(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "side": self.side.value,
                "rows": [list(row) for row in self.rows]}

    def column(self, j: int) -> list[int]:
        """Column j bottom-up, padded with 0 so that column[i] = X_{i,j}."""
        return [0] * j + [self.rows[i - 1][j - 1] for i in range(j, self.n + 1)]


class RightTrapezoid(PartialTriangle):
    """The k rightmost SW-NE diagonals: cells i - j <= k - 1."""

    side: ClassVar[Side] = Side.RIGHT
    k: int

    def span(self, i: int) -> range:
        return range(max(1, i - self.k + 1), i + 1)

    def _check_parameters(self) -> None:
        super()._check_parameters()
        if not 1 <= self.k <= self.n:
            raise ShapeError(f"k must lie in [1, {self.n}], got {self.k}")

    def _json_fields(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "side": self.side.value,
                "rows": [list(row) for row in self.rows]}


class Pentagon(PartialTriangle):
    """Cells with j <= k, i - j <= l - 1 and i <= m."""

    k: int
    l: int
    m: int

    def span(self, i: int) -> range:
        return range(max(1, i - self.l + 1), min(i, self.k) + 1)

    @property
    def height(self) -> int:
        return min(self.n, self.m)

    def _check_parameters(self) -> None:
        super()._check_parameters()
        for name in ("k", "l", "m"):
            value = getattr(self, name)
            if not 1 <= value <= self.n:
                raise ShapeError(f"{name} must lie in [1, {self.n}], got {value}")

    def _json_fields(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "l": self.l, "m": self.m,
                "rows": [list(row) for row in self.rows]}


def parse_object(text: str) -> PartialTriangle:
    """Decode any canonical triangle, trapezoid or pentagon JSON line."""
    data = json.loads(text)
    if "side" in data:
        model = LeftTrapezoid if data["side"] == Side.LEFT.value else RightTrapezoid
        return model(n=data["n"], k=data["k"], rows=data["rows"])
    if "m" in data:
        return Pentagon(n=data["n"], k=data["k"], l=data["l"], m=data["m"], rows=data["rows"])
    return GTTriangle(n=data["n"], rows=data["rows"])


# ==============================================================================
# Alternating sign matrices
# ==============================================================================

class ASM(BaseModel):
    """Square {-1, 0, 1} matrix whose nonzero entries alternate, starting and ending with 1."""

    model_config = ConfigDict(frozen=True)

    n: int
    cells: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _validate(self) -> "ASM":
        if self.n < 1 or len(self.cells) != self.n or any(len(r) != self.n for r in self.cells):
            raise ShapeError(f"an ASM of size {self.n} needs {self.n} rows of {self.n} entries")
        if any(v not in (-1, 0, 1) for row in self.cells for v in row):
            raise DomainError("ASM entries must be -1, 0 or 1")
        columns = tuple(zip(*self.cells))
        for label, lines in (("row", self.cells), ("column", columns)):
            for index, line in enumerate(lines, start=1):
                if not _alternates(line):
                    raise DomainError(f"{label} {index} does not alternate in sign with sum 1")
        return self

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "cells": [list(r) for r in self.cells]},
                          separators=(",", ":"))


def _alternates(line: tuple[int, ...]) -> bool:
    partial = 0
    for value in line:
        partial += value
        if partial not in (0, 1):
            return False
    return partial == 1


# ==============================================================================
# Shapes and statistics
# ==============================================================================

class Shape(BaseModel):
    """Shape parameters of a family member: a triangle, trapezoid or pentagon."""

    model_config = ConfigDict(frozen=True)

    kind: ShapeKind = ShapeKind.TRIANGLE
    n: int
    k: int | None = None
    l: int | None = None
    m: int | None = None

    @model_validator(mode="after")
    def _validate(self) -> "Shape":
        if self.n < 1:
            raise ShapeError(f"size must be positive, got {self.n}")
        needed = {
            ShapeKind.TRIANGLE: (),
            ShapeKind.LEFT: ("k",),
            ShapeKind.RIGHT: ("k",),
            ShapeKind.PENTAGON: ("k", "l", "m"),
        }[self.kind]
        for name in needed:
            value = getattr(self, name)
            if value is None or not 1 <= value <= self.n:
                raise ShapeError(f"{self.kind.value} shape needs {name} in [1, {self.n}]")
        return self

    def label(self) -> str:
        if self.kind == ShapeKind.TRIANGLE:
            return f"triangle({self.n})"
        if self.kind == ShapeKind.PENTAGON:
            return f"pentagon({self.n},{self.k},{self.l},{self.m})"
        return f"{self.kind.value}({self.n},{self.k})"


class StatRecord(BaseModel):
    """Statistic vector of a single triangle."""

    model_config = ConfigDict(frozen=True)

    alpha: int
    beta: int
    gamma: int
    mu: int
    nu: int


class StandardizationCounts(BaseModel):
    """
    Inversion and coinversion bookkeeping of the left and right standardizations.

    The *_expected values are the published counts nu(X) - n + k + 1 and
    mu(X) - k; they are the counts of the projection. Lowering a run
    boundary can break an equality along a pair of cells (lost) or create
    one (gained), so the counts actually reached are expected - lost + gained.
    """

    model_config = ConfigDict(frozen=True)

    k: int
    nu_l: int
    nu_l_expected: int
    nu_l_lost: int = 0
    nu_l_gained: int = 0
    mu_l_bound_ok: bool
    mu_r: int
    mu_r_expected: int
    mu_r_lost: int = 0
    mu_r_gained: int = 0
    nu_r_bound_ok: bool

    @property
    def holds(self) -> bool:
        """The published identities and bounds."""
        return (
            self.nu_l == self.nu_l_expected
            and self.mu_r == self.mu_r_expected
            and self.mu_l_bound_ok
            and self.nu_r_bound_ok
        )

    @property
    def bounds_hold(self) -> bool:
        return self.mu_l_bound_ok and self.nu_r_bound_ok

    @property
    def accounted(self) -> bool:
        """Reached counts equal expected - lost + gained on both sides."""
        return (
            self.nu_l == self.nu_l_expected - self.nu_l_lost + self.nu_l_gained
            and self.mu_r == self.mu_r_expected - self.mu_r_lost + self.mu_r_gained
        )

