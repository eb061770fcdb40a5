"""
Error hierarchy.
Every failure raised by the package derives from GogMagogError.
"""


class GogMagogError(Exception):
    """Base class for all domain errors."""
    pass


class ShapeError(GogMagogError):
    """Raised when rows do not have the lengths the shape requires."""
    pass


class DomainError(GogMagogError):
    """Raised when an entry is smaller than 1."""
    pass


class OrderError(GogMagogError):
    """Raised when an interlacing inequality fails.

    The offending cell is (i, j); direction is "lower" when X_{i+1,j} > X_{i,j}
    and "upper" when X_{i,j} > X_{i+1,j+1}.
    """

    def __init__(self, i: int, j: int, direction: str, message: str | None = None):
        self.i = i
        self.j = j
        self.direction = direction
        super().__init__(message or f"GT inequality violated at ({i},{j}) [{direction}]")


class CellIndexError(GogMagogError, IndexError):
    """Raised for a cell outside the triangular region."""
    pass


class SizeMismatchError(GogMagogError):
    """Raised when two triangles of different sizes are combined."""
    pass


class SizeError(GogMagogError):
    """Raised when an operation needs a larger triangle."""
    pass


class RangeError(GogMagogError):
    """Raised when a numeric parameter is outside its allowed range."""
    pass


class NotGogError(GogMagogError):
    """Raised when a Gog triangle is required."""
    pass


class NotInFamilyError(GogMagogError):
    """Raised when an object does not belong to the stated family."""
    pass


class NotExtensibleError(GogMagogError):
    """Raised when a partial array has no extension in the requested family."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None):
        self.cell = cell
        super().__init__(message)


class NotInvertibleError(GogMagogError):
    """Raised when an inverse map meets an invalid intermediate array."""
    pass


class NotLeftGogError(GogMagogError):
    """Raised when a left Gog trapezoid is required."""
    pass


class NotLeftGogamError(GogMagogError):
    """Raised when a left GOGAm trapezoid is required."""
    pass


class NotMemberError(GogMagogError):
    """Raised when a pentagon is outside the condition set of its side."""
    pass


class CapExceededError(GogMagogError):
    """Raised when a suite is asked for sizes above the configured cap."""
    pass


class InexactDivisionError(GogMagogError, ArithmeticError):
    """Raised when an exact division leaves a remainder."""
    pass


class NotGTImageError(GogMagogError):
    """Raised when a map produces an array that is not a GT triangle."""

    def __init__(self, message: str, rows: tuple[tuple[int, ...], ...] = ()):
        self.rows = rows
        super().__init__(message)
