"""
Worker pool over disjoint enumeration partitions.

Each task is a (function, family, shape, prefix) job whose result is a
Counter; results merge by addition, so completion order does not matter.
"""

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from functools import partial
from typing import Callable

from ..core.config import settings
from ..core.models import Family, Shape
from ..enumeration.families import count, partitions, stream
from ..stats.statistics import statistic

logger = logging.getLogger(__name__)

Task = Callable[[Family, Shape, tuple[int, ...]], Counter]


def count_task(family: Family, shape: Shape, prefix: tuple[int, ...]) -> Counter:
    """Counter with a single key: the number of objects in the partition."""
    return Counter({"count": count(family, shape, prefix)})


def bottom_task(family: Family, shape: Shape, prefix: tuple[int, ...]) -> Counter:
    """Objects in the partition, keyed by their bottom entry X_{1,1}."""
    return Counter(obj.rows[0][0] for obj in stream(family, shape, prefix))


def joint_task(family: Family, shape: Shape, prefix: tuple[int, ...]) -> Counter:
    """(mu, nu) pairs of the triangles in the partition."""
    return Counter(
        (statistic("mu", family, t), statistic("nu", family, t))
        for t in stream(family, shape, prefix)
    )


def statistic_task(name: str, family: Family, shape: Shape, prefix: tuple[int, ...]) -> Counter:
    """Distribution of one statistic over the partition; bind name with functools.partial."""
    return Counter(statistic(name, family, t) for t in stream(family, shape, prefix))


STATISTIC_TASKS: dict[str, Task] = {
    name: partial(statistic_task, name) for name in ("alpha", "beta", "gamma", "mu", "nu")
}


def run_partitioned(task: Task, family: Family, shape: Shape, jobs: int | None = None) -> Counter:
    """
    Run task over every partition of the shape and merge the counters.

    Args:
        task: Module-level function (picklable for the pool)
        family: Triangle family
        shape: Shape of the objects
        jobs: Worker processes; 1 runs inline

    Returns:
        The merged Counter
    """
    jobs = jobs or settings.jobs
    parts = partitions(shape)
    merged: Counter = Counter()
    if jobs <= 1:
        for prefix in parts:
            merged.update(task(family, shape, prefix))
        return merged
    logger.info("running %d partitions of %s with %d workers", len(parts), shape.label(), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(task, family, shape, prefix) for prefix in parts]
        for future in as_completed(futures):
            merged.update(future.result())
    return merged


def parallel_count(family: Family, shape: Shape, jobs: int | None = None) -> int:
    return run_partitioned(count_task, family, shape, jobs)["count"]
