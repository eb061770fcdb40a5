"""
Verification suites.

Each suite runs every comparison it knows about, records PASS/FAIL (or the
CONJECTURE statuses for statements that are not theorems) and never stops
at the first failure.
"""

import itertools
import logging
import math
import random
from collections import Counter
from typing import Callable

from ..bijections.left_trapezoids import (
    left1_gog_to_gogam,
    left1_gogam_to_gog,
    left2_gog_to_gogam,
    left2_gogam_to_gog,
)
from ..bijections.pentagon333 import (
    is_gog_pentagon333,
    is_gogam_pentagon333,
    pentagon333_gog_to_gogam,
    pentagon333_gogam_to_gog,
)
from ..bijections.standard import standard_image, standard_procedure_inverse
from ..core.config import settings
from ..core.errors import CapExceededError, GogMagogError
from ..core.models import Family, GTTriangle, Pentagon, Shape, ShapeKind, is_gt_grid
from ..enumeration.engine import enumerate_gt
from ..enumeration.families import (
    enumerate_gog,
    enumerate_left_trapezoids,
    enumerate_magog,
    enumerate_pentagons,
)
from ..stats.diamond import (
    achieving_triangle,
    corner_pairs,
    corner_triangle,
    diamond_set,
    pp1_violations,
)
from ..stats.standardization import standardization_counts
from ..stats.statistics import beta, mu, nu
from ..stats.zpoly import antidiagonal, mahonian, z_brute, z_cofactor, z_determinant
from ..triangles.asm import a_n, asm_to_gog, count_minus_ones, gog_to_asm, permutation_matrix
from ..triangles.classes import is_gog, is_gogam, is_gogam_by_inequality
from ..triangles.schutzenberger import braid_witness, schutzenberger, zero_padding_stable
from .pool import bottom_task, parallel_count, run_partitioned
from .report import Report
from .tables import conjecture3_tables

logger = logging.getLogger(__name__)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def _check_cap(name: str, n_max: int, cap: int) -> None:
    if n_max > cap:
        raise CapExceededError(f"n_max={n_max} exceeds {name}={cap}")


def _run_check(report: Report, label: str, check: Callable[..., None], *args) -> None:
    """Run one check; a domain error is recorded as a FAIL instead of ending the suite."""
    try:
        check(report, *args)
    except GogMagogError as exc:
        logger.warning("%s aborted: %s", label, exc)
        report.add(f"{label} aborted", False, f"{type(exc).__name__}: {exc}")


# ==============================================================================
# Equinumeration
# ==============================================================================

def pentagon_equinumeration(n: int) -> tuple[int, list[str]]:
    """
    Compare Gog and GOGAm pentagon counts for every (k, l, m) in [1, n]^3.

    Returns:
        (number of shapes compared, labels of shapes whose counts differ)
    """
    mismatches = []
    shapes = list(itertools.product(range(1, n + 1), repeat=3))
    for k, l, m in shapes:
        gog = sum(1 for _ in enumerate_pentagons(Family.GOG, n, k, l, m))
        gogam = sum(1 for _ in enumerate_pentagons(Family.GOGAM, n, k, l, m))
        if gog != gogam:
            mismatches.append(f"({n},{k},{l},{m}): {gog} vs {gogam}")
    return len(shapes), mismatches


def verify_equinumeration(n_max: int, jobs: int | None = None) -> Report:
    """
    Triangle counts against a_n, right and left trapezoid counts, the
    bottom-entry refinement and pentagon counts, for every n <= n_max.

    Triangles and pentagons stop at max_triangle_n; trapezoids go on to
    max_trapezoid_n.

    Raises:
        CapExceededError: n_max above max_trapezoid_n
    """
    _check_cap("max_trapezoid_n", n_max, settings.max_trapezoid_n)
    report = Report(suite=f"equinumeration n<={n_max}")
    for n in range(1, n_max + 1):
        logger.info("equinumeration n=%d", n)
        whole = n <= settings.max_triangle_n
        if whole:
            _run_check(report, f"triangles n={n}", _check_triangle_counts, n, jobs)
        for k in range(1, n + 1):
            _run_check(report, f"trapezoids ({n},{k})", _check_trapezoid_counts, n, k, jobs)
        if whole:
            _run_check(report, f"pentagons n={n}", _check_pentagon_counts, n)
    return report


def _check_triangle_counts(report: Report, n: int, jobs: int | None) -> None:
    triangle = Shape(n=n)
    counts = {f: parallel_count(f, triangle, jobs) for f in Family}
    expected = a_n(n)
    report.add(
        f"triangles n={n}",
        all(c == expected for c in counts.values()),
        f"gog={counts[Family.GOG]} magog={counts[Family.MAGOG]} "
        f"gogam={counts[Family.GOGAM]} a_n={expected}",
    )


def _check_trapezoid_counts(report: Report, n: int, k: int, jobs: int | None) -> None:
    right = Shape(kind=ShapeKind.RIGHT, n=n, k=k)
    gog = parallel_count(Family.GOG, right, jobs)
    magog = parallel_count(Family.MAGOG, right, jobs)
    gogam = parallel_count(Family.GOGAM, right, jobs)
    report.add(f"right ({n},{k}) gog=magog", gog == magog, f"{gog} vs {magog}")
    report.add(f"right ({n},{k}) gog=gogam", gog == gogam, f"{gog} vs {gogam}")

    left = Shape(kind=ShapeKind.LEFT, n=n, k=k)
    gog_bottoms = run_partitioned(bottom_task, Family.GOG, left, jobs)
    gogam_bottoms = run_partitioned(bottom_task, Family.GOGAM, left, jobs)
    gog, gogam = sum(gog_bottoms.values()), sum(gogam_bottoms.values())
    report.add(f"left ({n},{k}) gog=gogam", gog == gogam, f"{gog} vs {gogam}",
               conjecture=2 < k < n)
    report.add(
        f"left ({n},{k}) by bottom entry",
        gog_bottoms == gogam_bottoms,
        " ".join(f"{v}:{gog_bottoms[v]}/{gogam_bottoms[v]}" for v in range(1, n + 1)),
        conjecture=True,
    )
    if k == 1:
        report.add(f"left ({n},1) catalan", gog == gogam == catalan(n), f"{gog} vs C_{n}={catalan(n)}")


def _check_pentagon_counts(report: Report, n: int) -> None:
    compared, mismatches = pentagon_equinumeration(n)
    report.add(
        f"pentagons n={n}",
        not mismatches,
        f"{compared} shapes" + (f"; differ: {', '.join(mismatches)}" if mismatches else ""),
        conjecture=True,
    )


# ==============================================================================
# Bijections
# ==============================================================================

def _random_gt(rng: random.Random, n: int, max_entry: int) -> GTTriangle:
    top = sorted(rng.randint(1, max_entry) for _ in range(n))
    rows = [tuple(top)]
    for i in range(n - 1, 0, -1):
        above = rows[-1]
        rows.append(tuple(rng.randint(above[j], above[j + 1]) for j in range(i)))
    return GTTriangle.model_construct(n=n, rows=tuple(reversed(rows)))


def _check_schutzenberger(report: Report, n_max: int) -> None:
    for n in range(1, min(n_max, 4) + 1):
        failures = sum(1 for t in enumerate_gt(n, 5) if schutzenberger(schutzenberger(t)) != t)
        report.add(f"S involution n={n} entries<=5", failures == 0, f"{failures} failures")
    rng = random.Random(settings.random_seed)
    samples = settings.involution_samples
    failures = 0
    for _ in range(samples):
        t = _random_gt(rng, 6, 12)
        if schutzenberger(schutzenberger(t)) != t:
            failures += 1
    report.add(f"S involution random n=6 x{samples}", failures == 0, f"{failures} failures")
    for n in range(1, min(n_max, 5) + 1):
        images = {schutzenberger(t).key for t in enumerate_magog(n)}
        direct = {t.key for t in enumerate_gt(n, n) if is_gogam_by_inequality(t)}
        report.add(f"S(Magog) = GOGAm inequality set n={n}", images == direct,
                   f"{len(images)} vs {len(direct)}")
    for n in range(2, min(n_max, 4) + 1):
        unstable = sum(
            1 for t in enumerate_gt(n, n + 1) for k in range(1, n) if not zero_padding_stable(t, k)
        )
        report.add(f"S keeps 1-padded corners n={n}", unstable == 0, f"{unstable} failures")
    witness = braid_witness()
    report.add(
        "s1 s2 s1 differs from s2 s1 s2",
        witness is not None,
        witness[0].to_json() if witness is not None else "braid relation held everywhere",
    )


def _check_asm(report: Report, n_max: int) -> None:
    for n in range(1, min(n_max, 4) + 1):
        failures = sum(1 for t in enumerate_gog(n) if asm_to_gog(gog_to_asm(t)) != t)
        report.add(f"ASM round trip n={n}", failures == 0, f"{failures} failures")
    for n in range(1, n_max + 1):
        top = n * (n - 1) // 2
        failures = sum(
            1 for t in enumerate_gog(n) if mu(t) + nu(t) + count_minus_ones(gog_to_asm(t)) != top
        )
        report.add(f"mu+nu+(-1 count) n={n}", failures == 0, f"{failures} failures")


def _check_standard_procedure(report: Report, n_max: int) -> None:
    for n in range(1, min(n_max, 5) + 1):
        not_gt = not_gogam = round_trip = admissible = 0
        for t in enumerate_gog(n):
            grid, ok = standard_image(t)
            if not is_gt_grid(n, grid):
                not_gt += 1
                continue
            y = GTTriangle.from_grid(n, grid)
            if not is_gogam(y):
                not_gogam += 1
            if ok:
                admissible += 1
                try:
                    if standard_procedure_inverse(y) != t:
                        round_trip += 1
                except GogMagogError:
                    round_trip += 1
        report.add(f"standard procedure image is GT n={n}", not_gt == 0,
                   f"{not_gt} images are not GT triangles", erratum=True)
        report.add(f"standard procedure lands in GOGAm n={n}", not_gogam == 0,
                   f"{not_gogam} failures among GT images")
        report.add(f"standard procedure round trip n={n}", round_trip == 0,
                   f"{admissible} admissible, {round_trip} failures")
        inadmissible = 0
        for perm in itertools.permutations(range(1, n + 1)):
            if not standard_image(asm_to_gog(permutation_matrix(perm)))[1]:
                inadmissible += 1
        report.add(f"permutation triangles admissible n={n}", inadmissible == 0,
                   f"{math.factorial(n)} permutations, {inadmissible} inadmissible")


def _check_left1(report: Report, n_max: int) -> None:
    for n in range(1, min(n_max, settings.max_trapezoid_n) + 1):
        gog = list(enumerate_left_trapezoids(Family.GOG, n, 1))
        gogam = list(enumerate_left_trapezoids(Family.GOGAM, n, 1))
        images = {left1_gog_to_gogam(tr).key for tr in gog}
        back = {left1_gogam_to_gog(tr).key for tr in gogam}
        same = images == {tr.key for tr in gogam} and back == {tr.key for tr in gog}
        report.add(f"left1 identity n={n}", same and len(gog) == catalan(n),
                   f"{len(gog)} objects, C_{n}={catalan(n)}")


def _check_left2(report: Report, n_max: int) -> None:
    for n in range(2, min(n_max, 7) + 1):
        gog = list(enumerate_left_trapezoids(Family.GOG, n, 2))
        gogam = list(enumerate_left_trapezoids(Family.GOGAM, n, 2))
        gogam_keys = {tr.key for tr in gogam}
        outside = round_trip = bottom = 0
        for tr in gog:
            try:
                image = left2_gog_to_gogam(tr)
                if image.key not in gogam_keys:
                    outside += 1
                if image.rows[0] != tr.rows[0]:
                    bottom += 1
                if left2_gogam_to_gog(image) != tr:
                    round_trip += 1
            except GogMagogError:
                round_trip += 1
        backward = 0
        for tr in gogam:
            try:
                if left2_gog_to_gogam(left2_gogam_to_gog(tr)) != tr:
                    backward += 1
            except GogMagogError:
                backward += 1
        passed = outside == round_trip == bottom == backward == 0 and len(gog) == len(gogam)
        report.add(
            f"left2 bijection n={n}",
            passed,
            f"{len(gog)}/{len(gogam)} objects; outside={outside} round_trip={round_trip} "
            f"bottom={bottom} backward={backward}",
        )


def pentagon333_condition_sets(n: int) -> tuple[list[Pentagon], list[Pentagon]]:
    """(n,3,3,3) pentagons satisfying the explicit Gog and GOGAm conditions, entries <= n."""
    gog, gogam = [], []
    for t in enumerate_gt(3, n):
        p = Pentagon.model_construct(n=n, k=3, l=3, m=3, rows=t.rows)
        if is_gog_pentagon333(p):
            gog.append(p)
        if is_gogam_pentagon333(p):
            gogam.append(p)
    return gog, gogam


def _check_pentagon333(report: Report, n_max: int) -> None:
    for n in range(3, n_max + 1):
        gog, gogam = pentagon333_condition_sets(n)
        gogam_keys = {p.key for p in gogam}
        images: Counter = Counter()
        failures = 0
        for p in gog:
            try:
                image = pentagon333_gog_to_gogam(p)
                images[image.key] += 1
                if pentagon333_gogam_to_gog(image) != p:
                    failures += 1
            except GogMagogError:
                failures += 1
        bijective = set(images) == gogam_keys and all(c == 1 for c in images.values())
        report.add(
            f"pentagon333 bijection n={n}",
            bijective and failures == 0,
            f"{len(gog)}/{len(gogam)} objects, {failures} failures",
        )
        if n <= settings.max_triangle_n:
            cut_gog = {p.key for p in enumerate_pentagons(Family.GOG, n, 3, 3, 3)}
            cut_gogam = {p.key for p in enumerate_pentagons(Family.GOGAM, n, 3, 3, 3)}
            report.add(
                f"pentagon333 conditions match cuts n={n}",
                cut_gog == {p.key for p in gog} and cut_gogam == gogam_keys,
                f"gog {len(cut_gog)}/{len(gog)}, gogam {len(cut_gogam)}/{len(gogam)}",
            )


def verify_bijections(n_max: int) -> Report:
    """
    Certify the Schützenberger involution, the ASM correspondence, the
    standard procedure and the left1, left2 and pentagon333 maps.

    Raises:
        CapExceededError: n_max above max_pentagon_n
    """
    _check_cap("max_pentagon_n", n_max, settings.max_pentagon_n)
    report = Report(suite=f"bijections n<={n_max}")
    triangles = min(n_max, settings.max_triangle_n)
    _run_check(report, "schutzenberger", _check_schutzenberger, triangles)
    _run_check(report, "asm", _check_asm, triangles)
    _run_check(report, "standard procedure", _check_standard_procedure, triangles)
    _run_check(report, "left1", _check_left1, n_max)
    _run_check(report, "left2", _check_left2, n_max)
    _run_check(report, "pentagon333", _check_pentagon333, n_max)
    return report


# ==============================================================================
# Statistics
# ==============================================================================

def _check_standardization(report: Report, n: int) -> None:
    unbounded = unaccounted = nu_l = mu_r = 0
    for t in enumerate_gog(n):
        counts = standardization_counts(t)
        unbounded += not counts.bounds_hold
        unaccounted += not counts.accounted
        nu_l += counts.nu_l != counts.nu_l_expected
        mu_r += counts.mu_r != counts.mu_r_expected
    report.add(f"standardization bounds n={n}", unbounded == 0, f"{unbounded} failures")
    report.add(f"standardization counts = projection - lost + gained n={n}", unaccounted == 0,
               f"{unaccounted} failures")
    report.add(
        f"standardization published counts n={n}",
        nu_l == mu_r == 0,
        f"nu(LX) differs on {nu_l} triangles, mu(RX) on {mu_r}",
        erratum=True,
    )


def verify_statistics(n_max: int) -> Report:
    """
    Z(n, x, y) by determinant and enumeration, the diamond set, the
    standardization counts and the alpha/beta/gamma tables.

    Raises:
        CapExceededError: n_max above max_triangle_n
    """
    _check_cap("max_triangle_n", n_max, settings.max_triangle_n)
    report = Report(suite=f"statistics n<={n_max}")
    for n in range(1, n_max + 1):
        _run_check(report, f"Z polynomial n={n}", _check_z_polynomial, n)
        _run_check(report, f"diamond n={n}", _check_diamond, n)
        if n >= 2:
            _run_check(report, f"standardization n={n}", _check_standardization, n)

    for n in range(1, max(n_max, 8) + 1):
        violations = pp1_violations(n)
        report.add(f"diamond remark p(p+1)/2 n={n}", not violations, str(violations[:3]))

    for n in range(1, min(n_max, 5) + 1):
        _run_check(report, f"alpha/beta/gamma n={n}", _check_conjecture3, n)
    return report


def _check_z_polynomial(report: Report, n: int) -> None:
    brute = z_brute(n)
    if n <= settings.max_determinant_n:
        det = z_determinant(n)
        report.add(f"Z determinant = enumeration n={n}", det == brute, str(det))
    if n <= 5:
        report.add(f"Z cofactor = enumeration n={n}", z_cofactor(n) == brute)
    report.add(f"Z symmetric n={n}", brute.swap() == brute)
    report.add(f"Z(1,1) = a_n n={n}", brute.evaluate(1, 1) == a_n(n))
    report.add(f"antidiagonal Mahonian n={n}", antidiagonal(brute, n) == mahonian(n),
               str(mahonian(n)))


def _check_diamond(report: Report, n: int) -> None:
    achieved = {(mu(t), nu(t)) for t in enumerate_gog(n)}
    report.add(f"diamond set n={n}", achieved == diamond_set(n), f"{len(achieved)} pairs")
    for k, (low_mu, low_nu) in enumerate(corner_pairs(n)):
        witnesses = [t for t in enumerate_gog(n) if mu(t) == low_mu and nu(t) == low_nu]
        corner = corner_triangle(n, k)
        unique = len(witnesses) == 1 and witnesses[0] == corner and corner.rows[0][0] == n - k
        report.add(f"corner n={n} k={k}", unique, f"{len(witnesses)} witnesses")
    stuck = []
    for l, m in sorted(diamond_set(n)):
        t = achieving_triangle(n, l, m)
        if not is_gog(t) or (mu(t), nu(t)) != (l, m):
            stuck.append(f"({l},{m})")
    report.add(f"achieving witnesses n={n}", not stuck, ", ".join(stuck))


def _check_conjecture3(report: Report, n: int) -> None:
    tables = conjecture3_tables(n)
    details = "; ".join(f"{name}={'same' if same else 'differ'}"
                        for name, same in tables.per_statistic.items())
    report.add(f"alpha/beta/gamma across families n={n}", tables.confirmed, details, conjecture=True)
    mismatched = sum(
        1 for t in enumerate_magog(n) if beta(Family.GOGAM, schutzenberger(t)) != beta(Family.MAGOG, t)
    )
    report.add(f"beta Magog = beta GOGAm of S n={n}", mismatched == 0, f"{mismatched} failures")
