"""Scaling benchmark of the simplification engines on random partial orders."""

import logging
import time
from collections.abc import Sequence

import numpy as np
import pandas as pd

from swc.aoe.analysis.oracle import random_poset
from swc.aoe.graph.canonical import expand_aon
from swc.aoe.graph.engine import Engine, simplify

logger = logging.getLogger(__name__)

BENCH_STEPS = 4
"""Number of doubling problem sizes up to the largest one."""


def bench_sizes(max_tasks: int, steps: int = BENCH_STEPS) -> list[int]:
    """Returns doubling task counts ending at `max_tasks`, e.g. 50, 100, 200, 400."""
    return sorted({max_tasks >> k for k in range(steps)} - {0})


def run_bench(
    max_tasks: int,
    seed: int,
    density: float = 0.3,
    engines: Sequence[Engine] = ("optimized", "naive"),
    sizes: Sequence[int] | None = None,
) -> pd.DataFrame:
    """Times each engine on canonical graphs of random partial orders of increasing size.

    Args:
        max_tasks: The largest number of tasks.
        seed: The random seed of the generated partial orders.
        density: The probability that a pair of tasks is directly related.
        engines: The engines to time.
        sizes: The task counts to run. Defaults to `bench_sizes(max_tasks)`.

    Returns:
        A DataFrame indexed by task count with vertex counts before and after simplification,
        the fraction of vertices removed, and one `<engine>_s` column of seconds per engine.
    """
    rows = []
    for n in sizes if sizes is not None else bench_sizes(max_tasks):
        g = expand_aon(random_poset(n, density, seed).to_aon())
        row: dict[str, float] = {"tasks": n, "vertices_in": len(g)}
        for engine in engines:
            started = time.perf_counter()
            output, _ = simplify(g, engine=engine)
            row[f"{engine}_s"] = time.perf_counter() - started
            row["vertices_out"] = len(output)
            row["unlabeled_out"] = len(output.unlabeled_edges)
        row["reduction"] = 1 - row["vertices_out"] / row["vertices_in"]
        logger.info("Benchmarked %d tasks: %s", n, row)
        rows.append(row)
    columns = ["tasks", "vertices_in", "vertices_out", "unlabeled_out", "reduction"]
    columns += [f"{engine}_s" for engine in engines]
    return pd.DataFrame(rows, columns=columns).set_index("tasks")


def fit_exponent(table: pd.DataFrame, column: str = "optimized_s") -> float:
    """Fits the exponent `k` of ``time ~ c * tasks**k`` by least squares in log-log space."""
    times = table[column]
    slope, _ = np.polyfit(np.log(times.index.to_numpy(dtype=float)), np.log(times.to_numpy()), 1)
    return float(slope)
