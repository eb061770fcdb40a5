"""
Alternating sign matrices and their bijection with Gog triangles.
"""

import math
from typing import Iterator, Sequence

from ..core.errors import InexactDivisionError, NotGogError
from ..core.models import ASM, GTTriangle
from .classes import is_gog


def asm_to_gog(m: ASM) -> GTTriangle:
    """
    Partial column sums from the bottom, read row by row.

    Row r of the summed matrix holds n - r + 1 ones; their columns, in
    increasing order, form row n - r + 1 of the triangle.
    """
    n = m.n
    summed = [[0] * n for _ in range(n + 1)]
    for r in range(n - 1, -1, -1):
        summed[r] = [summed[r + 1][c] + m.cells[r][c] for c in range(n)]
    rows = []
    for i in range(1, n + 1):
        line = summed[n - i]
        rows.append(tuple(c + 1 for c in range(n) if line[c] == 1))
    return GTTriangle.model_construct(n=n, rows=tuple(rows))


def gog_to_asm(t: GTTriangle) -> ASM:
    """Inverse of asm_to_gog; NotGogError unless t is Gog."""
    if not is_gog(t):
        raise NotGogError("only Gog triangles correspond to ASMs")
    n = t.n
    summed = []
    for r in range(1, n + 1):
        ones = set(t.rows[n - r])
        summed.append([1 if c in ones else 0 for c in range(1, n + 1)])
    summed.append([0] * n)
    cells = tuple(
        tuple(summed[r][c] - summed[r + 1][c] for c in range(n)) for r in range(n)
    )
    return ASM.model_construct(n=n, cells=cells)


def count_minus_ones(m: ASM) -> int:
    """Number of -1 entries."""
    return sum(1 for row in m.cells for v in row if v == -1)


def permutation_matrix(perm: Sequence[int]) -> ASM:
    """Matrix with M_{r, perm[r]} = 1 (1-based values)."""
    n = len(perm)
    cells = tuple(tuple(1 if c == perm[r] else 0 for c in range(1, n + 1)) for r in range(n))
    return ASM(n=n, cells=cells)


def reflect_asm(m: ASM) -> ASM:
    """Vertical mirror: reverse every row."""
    return ASM.model_construct(n=m.n, cells=tuple(tuple(reversed(row)) for row in m.cells))


def enumerate_asms(n: int) -> Iterator[ASM]:
    """All n x n ASMs, in the order of their Gog triangles."""
    from ..enumeration.families import enumerate_gog

    for t in enumerate_gog(n):
        yield gog_to_asm(t)


def a_n(n: int) -> int:
    """
    Number of n x n ASMs: prod_{j=0}^{n-1} (3j+1)! / (n+j)!.

    The product is integral only as a whole, so numerator and denominator
    are accumulated separately and divided once.

    Raises:
        InexactDivisionError: the quotient is not an integer
    """
    numerator = 1
    denominator = 1
    for j in range(n):
        numerator *= math.factorial(3 * j + 1)
        denominator *= math.factorial(n + j)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(f"non-integral ASM count for n={n}")
    return quotient


def one_positions(m: ASM) -> tuple[int, int, int]:
    """
    Positions of the single 1 in the first column, the last row and the last column.

    Row and column numbers are 1-based, rows counted from the top.
    """
    n = m.n
    first_column = next(r + 1 for r in range(n) if m.cells[r][0] == 1)
    last_row = next(c + 1 for c in range(n) if m.cells[n - 1][c] == 1)
    last_column = next(r + 1 for r in range(n) if m.cells[r][n - 1] == 1)
    return first_column, last_row, last_column
