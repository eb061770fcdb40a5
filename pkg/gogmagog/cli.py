"""
Command-line entry point.

    python -m gogmagog enumerate --family gog --n 4
    python -m gogmagog count --family gogam --n 6 --side left --k 2 --jobs 4
    python -m gogmagog biject --map left2 --n 5
    python -m gogmagog stats --family gog --n 4 --statistic mu,nu
    python -m gogmagog zpoly --n 5 --method det
    python -m gogmagog verify --suite all

Domain errors are printed on stderr and exit with status 2; verify exits
with status 1 when a theorem check fails.
"""

import argparse
import json
import logging
import sys
from typing import Callable, Iterable, Iterator

from . import __version__
from .bijections.left_trapezoids import (
    left1_gog_to_gogam,
    left1_gogam_to_gog,
    left2_gog_to_gogam,
    left2_gogam_to_gog,
)
from .bijections.pentagon333 import pentagon333_gog_to_gogam, pentagon333_gogam_to_gog
from .bijections.standard import standard_image, standard_procedure_inverse
from .core.config import settings
from .core.errors import GogMagogError
from .core.logs import configure_logging
from .core.models import Family, GTTriangle, PartialTriangle, Shape, ShapeKind, is_gt_grid, parse_object
from .enumeration.families import enumerate_left_trapezoids, enumerate_pentagons, stream
from .harness.pool import parallel_count
from .harness.report import Report, markdown_table
from .harness.suites import verify_bijections, verify_equinumeration, verify_statistics
from .harness.tables import JOINT, conjecture3_tables, stats_table
from .stats.zpoly import z_brute, z_cofactor, z_determinant

logger = logging.getLogger(__name__)


# ==============================================================================
# Helpers
# ==============================================================================

def _shape(args: argparse.Namespace) -> Shape:
    if args.l is not None or args.m is not None:
        return Shape(kind=ShapeKind.PENTAGON, n=args.n, k=args.k, l=args.l, m=args.m)
    if args.side is not None:
        return Shape(kind=ShapeKind(args.side), n=args.n, k=args.k)
    return Shape(n=args.n)


def _emit_objects(objects: Iterable[PartialTriangle], fmt: str) -> int:
    total = 0
    for obj in objects:
        print(obj.to_json() if fmt == "jsonl" else obj.pretty() + "\n")
        total += 1
    return total


def _read_objects(lines: Iterable[str]) -> Iterator[PartialTriangle]:
    for line in lines:
        if line.strip():
            yield parse_object(line)


def _std_forward(t: GTTriangle) -> tuple[GTTriangle, dict[str, bool]]:
    grid, admissible = standard_image(t)
    return GTTriangle.from_grid(t.n, grid), {"admissible": admissible, "gt": is_gt_grid(t.n, grid)}


MAPS: dict[tuple[str, str], tuple[Callable, Callable[[int], Iterable[PartialTriangle]] | None]] = {
    ("std", "fwd"): (_std_forward, lambda n: stream(Family.GOG, Shape(n=n))),
    ("std", "inv"): (standard_procedure_inverse, None),
    ("left1", "fwd"): (left1_gog_to_gogam, lambda n: enumerate_left_trapezoids(Family.GOG, n, 1)),
    ("left1", "inv"): (left1_gogam_to_gog, lambda n: enumerate_left_trapezoids(Family.GOGAM, n, 1)),
    ("left2", "fwd"): (left2_gog_to_gogam, lambda n: enumerate_left_trapezoids(Family.GOG, n, 2)),
    ("left2", "inv"): (left2_gogam_to_gog, lambda n: enumerate_left_trapezoids(Family.GOGAM, n, 2)),
    ("pent333", "fwd"): (pentagon333_gog_to_gogam, lambda n: enumerate_pentagons(Family.GOG, n, 3, 3, 3)),
    ("pent333", "inv"): (pentagon333_gogam_to_gog, lambda n: enumerate_pentagons(Family.GOGAM, n, 3, 3, 3)),
}


# ==============================================================================
# Commands
# ==============================================================================

def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = _shape(args)
    total = _emit_objects(stream(Family(args.family), shape), args.format)
    logger.info("%d %s objects of shape %s", total, args.family, shape.label())
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    shape = _shape(args)
    total = parallel_count(Family(args.family), shape, args.jobs)
    if args.format == "jsonl":
        print(json.dumps({"family": args.family, "shape": shape.label(), "count": total},
                         separators=(",", ":")))
    else:
        print(markdown_table(["family", "shape", "count"], [[args.family, shape.label(), total]]))
    return 0


def cmd_biject(args: argparse.Namespace) -> int:
    """Apply a map to every object of its domain (with --n) or to JSON lines on stdin."""
    mapping, domain = MAPS[(args.map, args.direction)]
    if args.n is not None:
        if domain is None:
            raise GogMagogError("the inverse standard procedure reads triangles from stdin")
        objects = domain(args.n)
    else:
        objects = _read_objects(sys.stdin)
    for obj in objects:
        result = mapping(obj)
        extra = {}
        if isinstance(result, tuple):
            result, extra = result
        if args.format == "jsonl":
            record = {"input": json.loads(obj.to_json()), "output": json.loads(result.to_json()), **extra}
            print(json.dumps(record, separators=(",", ":")))
        else:
            print(obj.pretty() + "\n  ->\n" + result.pretty() + "\n")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    if args.statistic == "conjecture3":
        tables = conjecture3_tables(args.n, args.jobs)
        if args.format == "table":
            for table in tables.tables.values():
                print(table.to_markdown())
            print("coinciding: " + "; ".join(", ".join(group) for group in tables.coinciding))
        else:
            print(json.dumps(tables.to_dict(), separators=(",", ":")))
        return 0
    table = stats_table(Family(args.family), args.n, args.statistic, args.jobs)
    print(table.to_markdown() if args.format == "table" else table.to_json())
    return 0


def cmd_zpoly(args: argparse.Namespace) -> int:
    compute = {"det": z_determinant, "brute": z_brute, "cofactor": z_cofactor}[args.method]
    polynomial = compute(args.n)
    print(str(polynomial) if args.format == "table" else polynomial.to_json())
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    suites = {
        "equinumeration": lambda n: verify_equinumeration(n or settings.max_trapezoid_n, args.jobs),
        "bijections": lambda n: verify_bijections(n or settings.max_pentagon_n),
        "statistics": lambda n: verify_statistics(n or settings.max_triangle_n),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    combined = Report(suite="verify " + ", ".join(names))
    for name in names:
        logger.info("running %s suite", name)
        combined.extend(suites[name](args.n_max))
    fmt = {"jsonl": "json", "table": "table"}.get(args.format, args.format)
    print(combined.render(fmt))
    if not combined.ok:
        logger.info("%d checks failed", len(combined.failures))
    return 0 if combined.ok else 1


# ==============================================================================
# Parser
# ==============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gogmagog", description="Gog, Magog and GOGAm triangles")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=settings.log_level)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: list[str], default: str) -> None:
        p.add_argument("--format", choices=formats, default=default)
        p.add_argument("--jobs", type=int, default=settings.jobs)

    def shaped(p: argparse.ArgumentParser) -> None:
        p.add_argument("--family", choices=[f.value for f in Family], default=Family.GOG.value)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--side", choices=["left", "right"])
        p.add_argument("--k", type=int)
        p.add_argument("--l", type=int)
        p.add_argument("--m", type=int)

    p = sub.add_parser("enumerate", help="list every object of a family and shape")
    shaped(p)
    common(p, ["jsonl", "table"], "jsonl")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("count", help="count the objects of a family and shape")
    shaped(p)
    common(p, ["jsonl", "table"], "table")
    p.set_defaults(handler=cmd_count)

    p = sub.add_parser("biject", help="apply a bijection")
    p.add_argument("--map", choices=["std", "left1", "left2", "pent333"], required=True)
    p.add_argument("--direction", choices=["fwd", "inv"], default="fwd")
    p.add_argument("--n", type=int)
    common(p, ["jsonl", "table"], "jsonl")
    p.set_defaults(handler=cmd_biject)

    p = sub.add_parser("stats", help="distribution tables")
    p.add_argument("--family", choices=[f.value for f in Family], default=Family.GOG.value)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--statistic", default=JOINT,
                   choices=["alpha", "beta", "gamma", "mu", "nu", JOINT, "conjecture3"])
    common(p, ["jsonl", "table"], "table")
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("zpoly", help="the generating polynomial Z(n, x, y)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["det", "brute", "cofactor"], default="det")
    common(p, ["jsonl", "table"], "table")
    p.set_defaults(handler=cmd_zpoly)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", choices=["equinumeration", "bijections", "statistics", "all"],
                   default="all")
    p.add_argument("--n-max", type=int)
    common(p, ["table", "json", "yaml", "jsonl"], settings.report_format)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except GogMagogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
