"""Core module - configuration, models, errors and logging."""

from .config import settings, Settings
from .logs import configure_logging
from .models import (
    ASM,
    Cell,
    Family,
    GTTriangle,
    Grid,
    InversionList,
    LeftTrapezoid,
    PartialTriangle,
    Pentagon,
    RightTrapezoid,
    Shape,
    ShapeKind,
    Side,
    Statistic,
    StatRecord,
    StandardizationCounts,
    first_violation,
    grid_to_rows,
    is_gt_grid,
    parse_object,
    rows_to_grid,
)
from .errors import (
    CapExceededError,
    CellIndexError,
    DomainError,
    GogMagogError,
    InexactDivisionError,
    NotExtensibleError,
    NotGogError,
    NotGTImageError,
    NotInFamilyError,
    NotInvertibleError,
    NotLeftGogamError,
    NotLeftGogError,
    NotMemberError,
    OrderError,
    RangeError,
    ShapeError,
    SizeError,
    SizeMismatchError,
)

__all__ = [
    "settings",
    "Settings",
    "configure_logging",
    "ASM",
    "Cell",
    "Family",
    "GTTriangle",
    "Grid",
    "InversionList",
    "LeftTrapezoid",
    "PartialTriangle",
    "Pentagon",
    "RightTrapezoid",
    "Shape",
    "ShapeKind",
    "Side",
    "Statistic",
    "StatRecord",
    "StandardizationCounts",
    "first_violation",
    "grid_to_rows",
    "is_gt_grid",
    "parse_object",
    "rows_to_grid",
    "CapExceededError",
    "CellIndexError",
    "DomainError",
    "GogMagogError",
    "InexactDivisionError",
    "NotExtensibleError",
    "NotGogError",
    "NotGTImageError",
    "NotInFamilyError",
    "NotInvertibleError",
    "NotLeftGogamError",
    "NotLeftGogError",
    "NotMemberError",
    "OrderError",
    "RangeError",
    "ShapeError",
    "SizeError",
    "SizeMismatchError",
]
