"""
The alpha, beta and gamma statistics on Gog, Magog and GOGAm triangles,
and the inversion/coinversion counts mu and nu.
"""

from ..core.errors import NotInFamilyError
from ..core.models import Family, GTTriangle, StatRecord, Statistic
from ..triangles.classes import is_member
from ..triangles.schutzenberger import schutzenberger


def mu(t: GTTriangle) -> int:
    """Number of inversions X_{i,j} = X_{i+1,j}."""
    rows = t.rows
    return sum(
        1 for i in range(t.n - 1) for j in range(i + 1) if rows[i][j] == rows[i + 1][j]
    )


def nu(t: GTTriangle) -> int:
    """Number of coinversions X_{i,j} = X_{i+1,j+1}."""
    rows = t.rows
    return sum(
        1 for i in range(t.n - 1) for j in range(i + 1) if rows[i][j] == rows[i + 1][j + 1]
    )


def _require(family: Family, t: GTTriangle) -> None:
    if not is_member(family, t):
        raise NotInFamilyError(f"triangle is not {family.value}")


# ==============================================================================
# Alpha
# ==============================================================================

def _alpha_gog(t: GTTriangle) -> int:
    return sum(1 for row in t.rows if row[0] == 1)


def _alpha_gogam(t: GTTriangle) -> int:
    n = t.n
    grid = t.grid()
    ones = sum(1 for i in range(1, n + 1) if grid[i][1] == 1)
    for k in range(1, ones):
        i, j = n - ones + k, k + 1
        if j <= i < n and grid[i][j] == grid[i + 1][j]:
            return ones - 1
    return ones


def alpha(family: Family, t: GTTriangle) -> int:
    """
    Gog: number of k with X_{k,1} = 1.
    GOGAm: l, the length of the run of 1s at the top of column 1, minus one
    when some (n-l+k, k+1), 1 <= k <= l-1, is an inversion.
    Magog: the GOGAm value of S(t).

    Raises:
        NotInFamilyError: t is not in the family
    """
    _require(family, t)
    if family == Family.GOG:
        return _alpha_gog(t)
    if family == Family.GOGAM:
        return _alpha_gogam(t)
    return _alpha_gogam(schutzenberger(t))


# ==============================================================================
# Beta
# ==============================================================================

def beta(family: Family, t: GTTriangle) -> int:
    """Gog and GOGAm: X_{1,1}. Magog: top-row sum minus second-row sum."""
    _require(family, t)
    if family == Family.MAGOG:
        below = sum(t.rows[-2]) if t.n >= 2 else 0
        return sum(t.rows[-1]) - below
    return t.rows[0][0]


# ==============================================================================
# Gamma
# ==============================================================================

def _gamma_magog(t: GTTriangle) -> int:
    grid = t.grid()
    k = max(j for j in range(1, t.n + 1) if grid[j][j] == j)
    i, j = k, k
    while j > 1:
        if grid[i][j - 1] == grid[i - 1][j - 1]:
            j -= 1
        else:
            i, j = i - 1, j - 1
    return i


def gamma(family: Family, t: GTTriangle) -> int:
    """
    Gog: number of k with X_{k,k} = n.
    Magog: end row of the walk from (k, k), k the largest index with
    X_{k,k} = k, moving left while X_{i,j-1} = X_{i-1,j-1} and down-left otherwise.
    GOGAm: the Magog value of S(t).
    """
    _require(family, t)
    if family == Family.GOG:
        return sum(1 for k in range(1, t.n + 1) if t.rows[k - 1][k - 1] == t.n)
    if family == Family.MAGOG:
        return _gamma_magog(t)
    return _gamma_magog(schutzenberger(t))


def statistic(name: Statistic | str, family: Family, t: GTTriangle) -> int:
    """Dispatch by statistic name."""
    name = Statistic(name)
    if name == Statistic.MU:
        return mu(t)
    if name == Statistic.NU:
        return nu(t)
    return {Statistic.ALPHA: alpha, Statistic.BETA: beta, Statistic.GAMMA: gamma}[name](family, t)


def stat_record(family: Family, t: GTTriangle) -> StatRecord:
    """All five statistics of t."""
    return StatRecord(
        alpha=alpha(family, t),
        beta=beta(family, t),
        gamma=gamma(family, t),
        mu=mu(t),
        nu=nu(t),
    )
