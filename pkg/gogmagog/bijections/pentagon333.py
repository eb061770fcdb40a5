"""
Bijection between (n,3,3,3) Gog and GOGAm pentagons.

Such a pentagon is a 6-cell triangle

    a d f
     b e
      c

with a = X_{3,1}, d = X_{3,2}, f = X_{3,3}, b = X_{2,1}, e = X_{2,2}, c = X_{1,1}.
The image is read from a table keyed by the inversion pattern among the
sites d = e, a = b and b = c. The inverse is solved from the same table.
"""

from itertools import combinations

from ..core.errors import GogMagogError, NotMemberError
from ..core.models import Pentagon

SLOTS = ("a", "d", "f", "b", "e", "c")
SITES = {"de": ("d", "e"), "ab": ("a", "b"), "bc": ("b", "c")}

Image = tuple[tuple[str, int], ...]

# Each slot of the image is (source variable, offset).
IMAGE_TABLE: dict[frozenset[str], Image] = {
    frozenset(): (("a", 0), ("d", 0), ("f", 0), ("b", 0), ("e", 0), ("c", 0)),
    frozenset({"de"}): (("a", 0), ("d", 0), ("f", -1), ("b", 0), ("e", 0), ("c", 0)),
    frozenset({"ab"}): (("a", 0), ("d", -1), ("f", 0), ("b", 0), ("e", 0), ("c", 0)),
    frozenset({"bc"}): (("a", 0), ("d", 0), ("f", -1), ("b", 0), ("e", -1), ("c", 0)),
    frozenset({"ab", "de"}): (("a", 0), ("d", -1), ("f", -1), ("b", 0), ("e", 0), ("c", 0)),
    frozenset({"ab", "bc"}): (("a", 0), ("d", -1), ("f", -1), ("b", 0), ("e", -1), ("c", 0)),
    frozenset({"ab", "bc", "de"}): (("a", 0), ("d", -1), ("f", -2), ("b", 0), ("e", -1), ("c", 0)),
    # not admissible: the standard procedure would leave the GT region
    frozenset({"bc", "de"}): (("a", 0), ("d", -1), ("f", -2), ("a", 0), ("d", -1), ("b", 0)),
}

NON_STANDARD = frozenset({"bc", "de"})


def all_patterns() -> list[frozenset[str]]:
    sites = sorted(SITES)
    return [frozenset(c) for size in range(4) for c in combinations(sites, size)]


def pentagon_values(p: Pentagon) -> dict[str, int]:
    """Cell values by letter."""
    if (p.k, p.l, p.m) != (3, 3, 3) or p.n < 3:
        raise NotMemberError("expected an (n,3,3,3) pentagon")
    (c,), (b, e), (a, d, f) = p.rows
    return {"a": a, "d": d, "f": f, "b": b, "e": e, "c": c}


def make_pentagon333(n: int, values: dict[str, int]) -> Pentagon:
    """Validated pentagon from letter values."""
    rows = ((values["c"],), (values["b"], values["e"]), (values["a"], values["d"], values["f"]))
    return Pentagon(n=n, k=3, l=3, m=3, rows=rows)


def inversion_pattern(values: dict[str, int]) -> frozenset[str]:
    return frozenset(site for site, (x, y) in SITES.items() if values[x] == values[y])


def is_gog_pentagon333(p: Pentagon) -> bool:
    """a < d < f, b < e, f <= n, on top of the GT inequalities."""
    v = pentagon_values(p)
    if p.first_order_violation() is not None:
        return False
    return v["a"] < v["d"] < v["f"] and v["b"] < v["e"] and v["f"] <= p.n


def is_gogam_pentagon333(p: Pentagon) -> bool:
    """f <= n, f-e+d <= n-1, f-c+b <= n-1, f-e+d-b+a <= n-2, on top of the GT inequalities."""
    v = pentagon_values(p)
    if p.first_order_violation() is not None:
        return False
    n = p.n
    return (
        v["f"] <= n
        and v["f"] - v["e"] + v["d"] <= n - 1
        and v["f"] - v["c"] + v["b"] <= n - 1
        and v["f"] - v["e"] + v["d"] - v["b"] + v["a"] <= n - 2
    )


def _apply(image: Image, values: dict[str, int]) -> dict[str, int]:
    return {slot: values[source] + offset for slot, (source, offset) in zip(SLOTS, image)}


def pentagon333_gog_to_gogam(p: Pentagon) -> Pentagon:
    """
    Raises:
        NotMemberError: p is not an (n,3,3,3) Gog pentagon
    """
    if not is_gog_pentagon333(p):
        raise NotMemberError("expected an (n,3,3,3) Gog pentagon")
    values = pentagon_values(p)
    return make_pentagon333(p.n, _apply(IMAGE_TABLE[inversion_pattern(values)], values))


def _solve(image: Image, pattern: frozenset[str], target: dict[str, int]) -> dict[str, int] | None:
    """Preimage candidate under one table row, or None if the row is inconsistent."""
    values: dict[str, int] = {}
    for slot, (source, offset) in zip(SLOTS, image):
        value = target[slot] - offset
        if values.setdefault(source, value) != value:
            return None
    changed = True
    while changed:
        changed = False
        for site in pattern:
            x, y = SITES[site]
            if x in values and y not in values:
                values[y] = values[x]
                changed = True
            elif y in values and x not in values:
                values[x] = values[y]
                changed = True
    return values if len(values) == len(SLOTS) else None


def pentagon333_gogam_to_gog(p: Pentagon) -> Pentagon:
    """
    Inverse map: the unique table row whose preimage is a Gog pentagon with that pattern.

    Raises:
        NotMemberError: p is not an (n,3,3,3) GOGAm pentagon, or no unique preimage exists
    """
    if not is_gogam_pentagon333(p):
        raise NotMemberError("expected an (n,3,3,3) GOGAm pentagon")
    target = pentagon_values(p)
    matches = []
    for pattern, image in IMAGE_TABLE.items():
        values = _solve(image, pattern, target)
        if values is None or inversion_pattern(values) != pattern:
            continue
        try:
            candidate = make_pentagon333(p.n, values)
        except GogMagogError:
            continue
        if is_gog_pentagon333(candidate) and _apply(image, values) == target:
            matches.append(candidate)
    if len(matches) != 1:
        raise NotMemberError(f"expected one preimage, found {len(matches)}")
    return matches[0]
