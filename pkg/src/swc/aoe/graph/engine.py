"""Matrix-driven simplification engine.

Each outer iteration recomputes a path count matrix, removes every unlabeled edge bypassed by
another path in one batch, then performs either the rule 1 merges of one group found by
neighborhood bucket sorting, or a single rule 3 contraction found through the intersection
of the reachable sets of each vertex's incoming neighbors. The loop stops when neither
applies, giving ``O(mn^2)`` time overall.
"""

import logging
from collections.abc import Iterator
from typing import Literal

import numpy as np

from swc.aoe.graph.core import (
    AoeGraph,
    Edge,
    TaskReachability,
    is_acyclic,
    task_reachability,
    topological_order,
)
from swc.aoe.graph.errors import CycleError
from swc.aoe.graph.rules import (
    RULE1_KINDS,
    Direction,
    RuleApplication,
    RuleKind,
    check_step,
    simplify_naive,
)

logger = logging.getLogger(__name__)

Engine = Literal["naive", "optimized"]


class PathCountMatrix:
    """Path counts between ordered vertex pairs, capped at 2 (meaning two or more).

    Rows and columns are indexed by the vertices in ascending id order.
    """

    def __init__(self, vertices: list[int], counts: np.ndarray):
        """Initializes the matrix from vertices in ascending order and their count array."""
        self.vertices = tuple(vertices)
        self.index = {vertex: i for i, vertex in enumerate(self.vertices)}
        self.counts = counts

    def __getitem__(self, pair: tuple[int, int]) -> int:
        """Returns the capped number of paths from the first to the second vertex."""
        u, v = pair
        return int(self.counts[self.index[u], self.index[v]])

    def reachable(self, u: int) -> np.ndarray:
        """Returns the boolean row of vertices reachable from `u`."""
        return self.counts[self.index[u]] > 0


def compute_path_counts(g: AoeGraph) -> PathCountMatrix:
    """Counts the paths between every ordered vertex pair, capped at 2.

    Vertices are visited in reverse topological order. The paths out of `v` are the paths out
    of each outgoing neighbor `w` (plus the empty path at `w`), once per edge from `v` to `w`.
    Edge multiplicity is counted, so a task edge parallel to an unlabeled edge makes two paths.

    Args:
        g: An acyclic graph.

    Returns:
        The capped path count matrix.
    """
    order = topological_order(g)
    vertices = sorted(order)
    index = {vertex: i for i, vertex in enumerate(vertices)}
    counts = np.zeros((len(vertices), len(vertices)), dtype=np.int32)
    for v in reversed(order):
        row = counts[index[v]]
        for w in g.graph.successors(v):
            multiplicity = min(2, g.multiplicity(v, w))
            row += multiplicity * counts[index[w]]
            row[index[w]] += multiplicity
        # capped rows keep sums exact up to the cap since all terms are nonnegative
        np.minimum(row, 2, out=row)
    return PathCountMatrix(vertices, counts.astype(np.uint8))


def _bypassed_edges(g: AoeGraph, m: PathCountMatrix) -> list[Edge]:
    return [edge for edge in g.unlabeled_edges if m[edge.tail, edge.head] == 2]  # noqa: PLR2004


def rule2_sweep(g: AoeGraph, m: PathCountMatrix) -> AoeGraph:
    """Returns a copy of the graph without the unlabeled edges that have another path.

    Args:
        g: The graph.
        m: The path count matrix of `g`.

    Returns:
        The graph with every unlabeled edge ``(u, v)`` where ``m[u, v] == 2`` removed.
    """
    swept = g.copy()
    for edge in _bypassed_edges(g, m):
        swept.remove_edge(edge)
    return swept


def _radix_sorted_pairs(pairs: list[tuple[int, int]], size: int) -> list[tuple[int, int]]:
    # two stable bucket passes: by second element, then by first
    for position in (1, 0):
        buckets: list[list[tuple[int, int]]] = [[] for _ in range(size)]
        for pair in pairs:
            buckets[pair[position]].append(pair)
        pairs = [pair for bucket in buckets for pair in bucket]
    return pairs


def _bucket_refine(bucket: list[int], i: int, neighbors: dict[int, list[int]]) -> Iterator[list[int]]:
    if i == 0:
        yield bucket
        return
    refined: dict[int, list[int]] = {}
    for vertex in bucket:
        refined.setdefault(neighbors[vertex][i - 1], []).append(vertex)
    for key in sorted(refined):
        yield from _bucket_refine(refined[key], i - 1, neighbors)


def _merge_groups(g: AoeGraph, direction: Direction) -> list[tuple[int, ...]]:
    vertices = g.vertices
    if direction is Direction.FORWARD:
        candidates = [v for v in vertices if not g.has_outgoing_task(v)]
        pairs = [(e.tail, e.head) for e in g.unlabeled_edges]
    else:
        candidates = [v for v in vertices if not g.has_incoming_task(v)]
        pairs = [(e.head, e.tail) for e in g.unlabeled_edges]
    candidate_set = set(candidates)
    # pairs are (vertex, neighbor); candidates only have unlabeled edges on the compared side
    pairs = [pair for pair in pairs if pair[0] in candidate_set]
    neighbors: dict[int, list[int]] = {v: [] for v in candidates}
    for vertex, neighbor in _radix_sorted_pairs(pairs, max(vertices, default=0) + 1):
        neighbors[vertex].append(neighbor)
    by_degree: dict[int, list[int]] = {}
    for vertex in candidates:
        by_degree.setdefault(len(neighbors[vertex]), []).append(vertex)
    groups = []
    for degree in sorted(by_degree):
        for bucket in _bucket_refine(by_degree[degree], degree, neighbors):
            if len(bucket) > 1:
                groups.append(tuple(sorted(bucket)))
    return sorted(groups)


def merge_detection(g: AoeGraph) -> list[tuple[Direction, tuple[int, ...]]]:
    """Finds the groups of vertices that rule 1 can merge.

    For the forward pass, vertices without outgoing tasks are bucketed by out-degree and then
    refined by bucket sorting on each position of their sorted outgoing neighbor lists; the
    backward pass does the same with incoming neighbors of vertices without incoming tasks.

    Args:
        g: A graph to which rule 2 no longer applies.

    Returns:
        The groups of two or more mergeable vertices, each tagged with its direction. Forward
        groups come first, each list ordered by ascending members.
    """
    return [(direction, group) for direction in Direction for group in _merge_groups(g, direction)]


def rule3_scan(g: AoeGraph, m: PathCountMatrix) -> Edge | None:
    """Finds the first unlabeled edge that rule 3 can contract.

    For each candidate edge ``(u, v)``, all outgoing neighbors of `u` must lie in the
    intersection of the reachable sets of the incoming neighbors of `v`. Pairs involving `u`
    or `v` themselves are satisfied by the edge, which the reachable sets already include.

    Args:
        g: A graph to which rule 2 no longer applies.
        m: A path count matrix with the reachability of `g`.

    Returns:
        The first contractible unlabeled edge in ascending order, or ``None``.
    """
    intersections: dict[int, np.ndarray] = {}
    for edge in g.unlabeled_edges:
        u, v = edge.tail, edge.head
        if m[u, v] > 1 or g.multiplicity(u, v) > 1:
            continue
        if g.has_outgoing_task(u) and g.in_degree(v) > 1:
            continue
        if g.has_incoming_task(v) and g.out_degree(u) > 1:
            continue
        if v not in intersections:
            common = np.ones(len(m.vertices), dtype=bool)
            for x in g.graph.predecessors(v):
                common &= m.reachable(x)
            intersections[v] = common
        if all(intersections[v][m.index[y]] for y in g.graph.successors(u)):
            return edge
    return None


def _record(
    g: AoeGraph,
    applied: list[RuleApplication],
    application: RuleApplication,
    expected: TaskReachability | None,
) -> None:
    applied.append(application)
    if expected is not None:
        check_step(g, expected, application)


def iter_optimized(
    g: AoeGraph, expected: TaskReachability | None = None
) -> Iterator[list[RuleApplication]]:
    """Runs the outer loop of the matrix-driven engine, rewriting `g` in place.

    Args:
        g: An acyclic graph. It holds the saturated result once the iterator is exhausted.
        expected: If given, the task reachability verified after every rule application.

    Yields:
        The rule applications of each outer iteration. The last iteration performs no merge.
    """
    while True:
        m = compute_path_counts(g)
        applied: list[RuleApplication] = []
        for edge in _bypassed_edges(g, m):
            g.remove_edge(edge)
            _record(g, applied, RuleApplication(RuleKind.RULE2, (edge.tail, edge.head)), expected)
        groups = merge_detection(g)
        if groups:
            direction, (keep, *others) = groups[0]
            for other in others:
                g.merge(keep, other)
                _record(g, applied, RuleApplication(RULE1_KINDS[direction], (keep, other)), expected)
        elif (edge := rule3_scan(g, m)) is not None:
            g.merge(edge.tail, edge.head)
            _record(g, applied, RuleApplication(RuleKind.RULE3, (edge.tail, edge.head)), expected)
        else:
            yield applied
            return
        yield applied


def simplify_optimized(g: AoeGraph, check: bool = False) -> tuple[AoeGraph, list[RuleApplication]]:
    """Simplifies a graph with the matrix-driven engine.

    Args:
        g: An acyclic graph, canonical or not.
        check: If True, verify acyclicity and task reachability after every rule application.

    Returns:
        The saturated graph and the sequence of applied rules.
    """
    if not is_acyclic(g):
        raise CycleError("Cannot simplify a cyclic graph.")
    work = g.copy()
    expected = task_reachability(g) if check else None
    trace: list[RuleApplication] = []
    iterations = 0
    for applied in iter_optimized(work, expected):
        iterations += 1
        trace.extend(applied)
    logger.info(
        "Optimized simplification: %d -> %d vertices in %d iterations.", len(g), len(work), iterations
    )
    return work, trace


def simplify(
    g: AoeGraph, engine: Engine = "optimized", check: bool = False
) -> tuple[AoeGraph, list[RuleApplication]]:
    """Simplifies a graph to its vertex-minimal equivalent with the specified engine."""
    if engine == "naive":
        return simplify_naive(g, check=check)
    if engine == "optimized":
        return simplify_optimized(g, check=check)
    raise ValueError(f"Unknown engine '{engine}'.")
