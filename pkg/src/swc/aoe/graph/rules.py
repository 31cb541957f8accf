"""Simplification rules and the reference fixpoint driver.

Three local rules rewrite an activity-on-edge graph without changing its task reachability:

1. Merge two vertices without outgoing tasks that have the same outgoing neighbors
   (forward), or without incoming tasks that have the same incoming neighbors (backward).
2. Remove an unlabeled edge ``(u, v)`` when another path leads from `u` to `v`.
3. Contract an unlabeled edge ``(u, v)`` when rule 2 does not apply to it, a task leaving
   `u` forbids other edges into `v`, a task entering `v` forbids other edges out of `u`,
   and every incoming neighbor of `v` reaches every outgoing neighbor of `u`.

Applying them until none applies yields the unique vertex-minimal equivalent graph.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations

import numpy as np

from swc.aoe.graph.core import (
    AoeGraph,
    Edge,
    TaskReachability,
    VertexReachability,
    is_acyclic,
    task_reachability,
)
from swc.aoe.graph.errors import (
    CycleError,
    InvariantError,
    NotUnlabeledError,
    RuleNotApplicableError,
    UnknownEdgeError,
)

logger = logging.getLogger(__name__)


class Direction(StrEnum):
    """The neighborhood compared by rule 1."""

    FORWARD = "forward"
    BACKWARD = "backward"


class RuleKind(StrEnum):
    """The kind of a rule application."""

    RULE1_FORWARD = "rule1-forward"
    RULE1_BACKWARD = "rule1-backward"
    RULE2 = "rule2"
    RULE3 = "rule3"


@dataclass(frozen=True)
class RuleApplication:
    """A single rewrite step.

    Attributes:
        kind: The rule that was applied.
        subjects: The merged vertex pair for rules 1 and 3, or the endpoints of the
            removed unlabeled edge for rule 2.
    """

    kind: RuleKind
    subjects: tuple[int, int]


RULE1_KINDS = {Direction.FORWARD: RuleKind.RULE1_FORWARD, Direction.BACKWARD: RuleKind.RULE1_BACKWARD}
"""The rule application kind of each rule 1 direction."""


def _same_neighbors(g: AoeGraph, u: int, v: int, direction: Direction) -> bool:
    if direction is Direction.FORWARD:
        if g.has_outgoing_task(u) or g.has_outgoing_task(v):
            return False
        return g.successors(u) == g.successors(v)
    if g.has_incoming_task(u) or g.has_incoming_task(v):
        return False
    return g.predecessors(u) == g.predecessors(v)


def _check_unlabeled(g: AoeGraph, edge: Edge) -> None:
    if edge.is_task:
        raise NotUnlabeledError(f"Edge {edge} is a task edge.")
    if not g.has_edge(edge):
        raise UnknownEdgeError(f"Edge {edge} is not in the graph.")


def _has_bypass(g: AoeGraph, reach: VertexReachability, edge: Edge) -> bool:
    u, v = edge.tail, edge.head
    if g.multiplicity(u, v) > 1:
        return True
    return any(w != v and reach(w, v) for w in g.successors(u))


def _contractible(g: AoeGraph, reach: VertexReachability, edge: Edge) -> bool:
    u, v = edge.tail, edge.head
    if g.has_outgoing_task(u) and g.in_degree(v) > 1:
        return False
    if g.has_incoming_task(v) and g.out_degree(u) > 1:
        return False
    # pairs through u or v itself are witnessed by the edge (u, v)
    return all(
        x == u or y == v or reach(x, y) for x in g.predecessors(v) for y in g.successors(u)
    )


def rule1_applicable(g: AoeGraph, u: int, v: int) -> Direction | None:
    """Checks whether rule 1 can merge two vertices.

    Args:
        g: The graph.
        u: The first vertex.
        v: The second vertex, distinct from `u`.

    Returns:
        `Direction.FORWARD` if neither vertex has an outgoing task and both have the same
        outgoing neighbors, `Direction.BACKWARD` for the symmetric incoming condition, or
        ``None`` if rule 1 does not apply.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError(f"Rule 1 compares distinct vertices, got {u} twice.")
    for direction in Direction:
        if _same_neighbors(g, u, v, direction):
            return direction
    return None


def rule2_applicable(g: AoeGraph, edge: Edge) -> bool:
    """Returns whether an unlabeled edge can be removed because another path bypasses it."""
    _check_unlabeled(g, edge)
    return _has_bypass(g, VertexReachability(g), edge)


def rule3_applicable(g: AoeGraph, edge: Edge) -> bool:
    """Returns whether an unlabeled edge can be contracted by rule 3."""
    _check_unlabeled(g, edge)
    reach = VertexReachability(g)
    return not _has_bypass(g, reach, edge) and _contractible(g, reach, edge)


def iter_applicable_rules(g: AoeGraph) -> Iterator[RuleApplication]:
    """Yields every rule application available on the graph, in deterministic order.

    Rule 1 merges come first (forward, then backward; pairs ascending within each group),
    followed by rule 2 and rule 3 applications in ascending edge order. The graph must not
    be modified while the iterator is consumed.

    Args:
        g: An acyclic graph.

    Yields:
        The applicable rule applications.
    """
    reach = VertexReachability(g)
    for direction, kind in RULE1_KINDS.items():
        groups: dict[frozenset[int], list[int]] = {}
        for vertex in g.vertices:
            if direction is Direction.FORWARD and not g.has_outgoing_task(vertex):
                groups.setdefault(frozenset(g.successors(vertex)), []).append(vertex)
            elif direction is Direction.BACKWARD and not g.has_incoming_task(vertex):
                groups.setdefault(frozenset(g.predecessors(vertex)), []).append(vertex)
        for members in groups.values():
            for pair in combinations(members, 2):
                yield RuleApplication(kind, pair)
    for edge in g.unlabeled_edges:
        if _has_bypass(g, reach, edge):
            yield RuleApplication(RuleKind.RULE2, (edge.tail, edge.head))
        elif _contractible(g, reach, edge):
            yield RuleApplication(RuleKind.RULE3, (edge.tail, edge.head))


def is_applicable(g: AoeGraph, application: RuleApplication) -> bool:
    """Returns whether the rule application's precondition holds on the graph."""
    u, v = application.subjects
    if u not in g or v not in g or u == v:
        return False
    match application.kind:
        case RuleKind.RULE1_FORWARD:
            return _same_neighbors(g, u, v, Direction.FORWARD)
        case RuleKind.RULE1_BACKWARD:
            return _same_neighbors(g, u, v, Direction.BACKWARD)
        case RuleKind.RULE2:
            return g.has_edge(Edge(u, v)) and rule2_applicable(g, Edge(u, v))
        case RuleKind.RULE3:
            return g.has_edge(Edge(u, v)) and rule3_applicable(g, Edge(u, v))


def apply_in_place(g: AoeGraph, application: RuleApplication) -> None:
    """Performs a rule application on the graph without checking its precondition."""
    u, v = application.subjects
    if application.kind is RuleKind.RULE2:
        g.remove_edge(Edge(u, v))
    else:
        g.merge(u, v)
    logger.debug("Applied %s to %s.", application.kind, application.subjects)


def check_step(g: AoeGraph, expected: TaskReachability, application: RuleApplication) -> None:
    """Raises `InvariantError` if a rewrite step broke acyclicity or task reachability."""
    if not is_acyclic(g):
        raise InvariantError(f"Graph became cyclic after {application}.")
    if task_reachability(g) != expected:
        raise InvariantError(f"Task reachability changed after {application}.")


def apply_rule(g: AoeGraph, application: RuleApplication, check: bool = False) -> AoeGraph:
    """Returns a copy of the graph with a rule applied.

    Rules 1 and 3 merge the subject vertices into the smaller id; rule 2 removes the subject
    edge.

    Args:
        g: The graph to rewrite.
        application: The rule application to perform.
        check: If True, verify that acyclicity and task reachability are preserved.

    Returns:
        The rewritten graph.
    """
    if not is_applicable(g, application):
        raise RuleNotApplicableError(f"{application.kind} does not apply to {application.subjects}.")
    expected = task_reachability(g) if check else None
    rewritten = g.copy()
    apply_in_place(rewritten, application)
    if expected is not None:
        check_step(rewritten, expected, application)
    return rewritten


def simplify_naive(
    g: AoeGraph, rng: np.random.Generator | None = None, check: bool = False
) -> tuple[AoeGraph, list[RuleApplication]]:
    """Applies simplification rules one at a time until none applies.

    Args:
        g: An acyclic graph, canonical or not.
        rng: If specified, each step picks uniformly among all applicable rule applications.
            Otherwise the first application in deterministic order is taken.
        check: If True, verify acyclicity and task reachability after every step.

    Returns:
        The saturated graph and the sequence of applied rules.
    """
    if not is_acyclic(g):
        raise CycleError("Cannot simplify a cyclic graph.")
    work = g.copy()
    expected = task_reachability(g) if check else None
    trace: list[RuleApplication] = []
    while True:
        if rng is None:
            application = next(iter_applicable_rules(work), None)
        else:
            candidates = list(iter_applicable_rules(work))
            application = candidates[rng.integers(len(candidates))] if candidates else None
        if application is None:
            break
        apply_in_place(work, application)
        if expected is not None:
            check_step(work, expected, application)
        trace.append(application)
    logger.info("Naive simplification: %d -> %d vertices in %d steps.", len(g), len(work), len(trace))
    return work, trace
