"""Scheduling of milestone vertices once task durations are known."""

import math
from collections.abc import Mapping
from dataclasses import dataclass

import pandas as pd

from swc.aoe.graph.core import AoeGraph, topological_order
from swc.aoe.graph.errors import MissingDurationError

TOLERANCE = 1e-9
"""Absolute tolerance when comparing path lengths for criticality."""


@dataclass(frozen=True)
class Timeline:
    """The earliest schedule of a graph.

    Attributes:
        level: The earliest time of each milestone vertex, indexed by vertex id.
        makespan: The length of the longest weighted path.
        critical_tasks: The tasks lying on some longest weighted path.
    """

    level: pd.Series
    makespan: float
    critical_tasks: frozenset[str]


def _weights(g: AoeGraph, durations: Mapping[str, float]) -> dict[str, float]:
    weights = {}
    for task in g.tasks:
        if task not in durations:
            raise MissingDurationError(f"Task '{task}' has no duration.")
        if durations[task] <= 0:
            raise ValueError(f"Task '{task}' must have a positive duration, got {durations[task]}.")
        weights[task] = float(durations[task])
    return weights


def schedule(g: AoeGraph, durations: Mapping[str, float]) -> Timeline:
    """Computes the earliest start time of every milestone and the critical tasks.

    Task edges weigh their duration and unlabeled edges weigh nothing. Vertices without
    incoming edges are scheduled at time 0.

    Args:
        g: An acyclic graph.
        durations: The duration of every task of the graph.

    Returns:
        The timeline of the graph.
    """
    order = topological_order(g)
    weights = _weights(g, durations)
    earliest: dict[int, float] = dict.fromkeys(order, 0.0)
    for v in order:
        for tail, _, task in g.graph.in_edges(v, keys=True):
            earliest[v] = max(earliest[v], earliest[tail] + weights.get(task, 0.0))
    remaining: dict[int, float] = dict.fromkeys(order, 0.0)
    for v in reversed(order):
        for _, head, task in g.graph.out_edges(v, keys=True):
            remaining[v] = max(remaining[v], weights.get(task, 0.0) + remaining[head])
    makespan = max(earliest.values(), default=0.0)
    critical = frozenset(
        edge.task
        for edge in g.edges
        if edge.task is not None
        and math.isclose(
            earliest[edge.tail] + weights[edge.task] + remaining[edge.head], makespan, abs_tol=TOLERANCE
        )
    )
    level = pd.Series(earliest, name="level").sort_index()
    level.index.name = "vertex"
    return Timeline(level=level, makespan=makespan, critical_tasks=critical)


def task_table(g: AoeGraph, durations: Mapping[str, float]) -> pd.DataFrame:
    """Tabulates the earliest start and finish of every task.

    Args:
        g: An acyclic graph.
        durations: The duration of every task of the graph.

    Returns:
        A DataFrame indexed by task with `start`, `duration`, `finish` and `critical` columns.
    """
    timeline = schedule(g, durations)
    tasks = g.tasks
    start = [timeline.level[g.task_edge(task).tail] for task in tasks]
    duration = [float(durations[task]) for task in tasks]
    data = pd.DataFrame(
        {
            "start": start,
            "duration": duration,
            "finish": [s + d for s, d in zip(start, duration, strict=True)],
            "critical": [task in timeline.critical_tasks for task in tasks],
        },
        index=pd.Index(tasks, name="task"),
    )
    return data
