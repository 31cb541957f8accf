"""Independent checks of simplification outputs: identity, minimality, and confluence."""

import logging
import string
import warnings
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import permutations
from typing import NamedTuple

import numpy as np

from swc.aoe.graph.canonical import expand_aon
from swc.aoe.graph.core import AoeGraph, AonGraph, Edge, TaskReachability
from swc.aoe.graph.engine import simplify_optimized
from swc.aoe.graph.errors import CycleError, NotSaturatedError, TooLargeError
from swc.aoe.graph.rules import iter_applicable_rules, simplify_naive

logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_TASKS = 4
"""Default task cap for the exhaustive minimality search."""


class VertexSignature(NamedTuple):
    """The tasks ending at and starting from a vertex."""

    in_tasks: tuple[str, ...]
    out_tasks: tuple[str, ...]


def signatures(g: AoeGraph) -> dict[int, VertexSignature]:
    """Returns the signature of every vertex of the graph."""
    return {v: VertexSignature(tuple(g.in_tasks(v)), tuple(g.out_tasks(v))) for v in g.vertices}


def is_saturated(g: AoeGraph) -> bool:
    """Returns whether no simplification rule applies to the graph."""
    return next(iter_applicable_rules(g), None) is None


def renumber(g: AoeGraph) -> AoeGraph:
    """Returns a copy of the graph with vertices renumbered by ascending signature.

    Vertices with equal signatures keep their relative order. On saturated outputs every
    signature is distinct, so equal outputs renumber to equal graphs.
    """
    signature = signatures(g)
    order = sorted(g.vertices, key=lambda v: (signature[v], v))
    mapping = {old: new for new, old in enumerate(order)}
    return AoeGraph(
        range(len(order)), (Edge(mapping[e.tail], mapping[e.head], e.task) for e in g.edges)
    )


def same_output(g: AoeGraph, h: AoeGraph) -> bool:
    """Returns whether two saturated outputs are the same graph up to vertex naming.

    Vertices are matched by signature. The outputs are the same when this matching is a
    bijection under which both the task edges and the unlabeled edges correspond.

    Args:
        g: A saturated graph.
        h: A saturated graph over the same tasks.

    Returns:
        True if the outputs are the same.
    """
    for graph in (g, h):
        if not is_saturated(graph):
            raise NotSaturatedError(f"{graph} still admits a simplification rule.")
    if g.tasks != h.tasks:
        return False
    g_signatures, h_signatures = signatures(g), signatures(h)
    h_vertices = {signature: v for v, signature in h_signatures.items()}
    if len(set(g_signatures.values())) != len(g) or len(h_vertices) != len(h):
        return False
    if set(g_signatures.values()) != set(h_vertices):
        return False
    to_h = {v: h_vertices[signature] for v, signature in g_signatures.items()}
    mapped = {Edge(to_h[e.tail], to_h[e.head], e.task) for e in g.edges}
    return mapped == set(h.edges)


def _endpoint_assignments(n: int, blocks: int) -> Iterator[list[int]]:
    # start/end vertex of each task, interleaved, as a restricted growth string over `blocks` vertices
    def grow(prefix: list[int], top: int) -> Iterator[list[int]]:
        if len(prefix) == 2 * n:
            yield prefix
            return
        for block in range(min(top + 2, blocks)):
            if len(prefix) % 2 and block == prefix[-1]:
                continue
            yield from grow([*prefix, block], max(top, block))

    yield from grow([], -1)


def _realizes(starts: list[int], ends: list[int], related: np.ndarray, size: int) -> bool:
    n = len(starts)
    adjacency = [0] * size
    for i in range(n):
        adjacency[starts[i]] |= 1 << ends[i]
        for j in range(n):
            if i == j:
                continue
            if ends[i] == starts[j] and not related[i, j]:
                return False
            if related[i, j] and ends[i] != starts[j]:
                adjacency[ends[i]] |= 1 << starts[j]
    reach = adjacency[:]
    for k in range(size):
        for v in range(size):
            if reach[v] >> k & 1:
                reach[v] |= reach[k]
    if any(reach[v] >> v & 1 for v in range(size)):
        return False
    return all(
        bool(ends[i] == starts[j] or reach[ends[i]] >> starts[j] & 1) == bool(related[i, j])
        for i in range(n)
        for j in range(n)
        if i != j
    )


def brute_force_min(r: TaskReachability, max_tasks: int = BRUTE_FORCE_MAX_TASKS) -> int:
    """Finds the minimum vertex count of an acyclic graph realizing a task reachability relation.

    Every way of identifying task endpoints on `k` vertices (set partitions of the start and
    end vertices, no task starting where it ends) is tried for increasing `k`. Each required
    pair not already joined by a shared vertex gets an unlabeled edge from the end of the first
    task to the start of the second; adding all of them maximizes reachability for that
    assignment, so the assignment is feasible exactly when the result is acyclic and realizes
    the relation exactly.

    Args:
        r: The task reachability relation to realize.
        max_tasks: The largest task count accepted.

    Returns:
        The minimum number of vertices. A graph without tasks still has one vertex.
    """
    n = len(r.labels)
    if n > max_tasks:
        raise TooLargeError(f"Brute-force search is limited to {max_tasks} tasks, relation has {n}.")
    if n == 0:
        return 1
    for size in range(2, 2 * n + 1):
        for assignment in _endpoint_assignments(n, size):
            if _realizes(assignment[0::2], assignment[1::2], r.matrix, size):
                return size
    return 2 * n


@dataclass(frozen=True)
class PosetSpec:
    """A strict partial order over task labels.

    Attributes:
        labels: The task labels.
        relation: The ordered pairs ``(a, b)`` with `a` before `b`.
    """

    labels: tuple[str, ...]
    relation: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        """Validates that the relation is irreflexive, transitive and acyclic."""
        reachability = TaskReachability.from_pairs(self.labels, self.relation)
        if not reachability.is_irreflexive() or any((b, a) in self.relation for a, b in self.relation):
            raise CycleError("A partial order must be irreflexive and acyclic.")
        if not reachability.is_transitive():
            raise ValueError("A partial order must be transitive.")

    @property
    def n_tasks(self) -> int:
        """The number of tasks."""
        return len(self.labels)

    def to_reachability(self) -> TaskReachability:
        """Returns the order as a task reachability relation."""
        return TaskReachability.from_pairs(self.labels, self.relation)

    def to_aon(self) -> AonGraph:
        """Returns the order as a dependency description."""
        return AonGraph(self.labels, self.relation)


def random_poset(n: int, density: float, seed: int) -> PosetSpec:
    """Generates a random partial order.

    Tasks are shuffled, each pair in shuffled order is related with probability `density`,
    and the result is transitively closed.

    Args:
        n: The number of tasks.
        density: The probability that a pair is directly related.
        seed: The random seed; equal seeds give equal orders.

    Returns:
        The partial order over labels ``t0, t1, ...`` (zero-padded to a common width).
    """
    if n < 0 or not 0 <= density <= 1:
        raise ValueError(f"Expected n >= 0 and 0 <= density <= 1, got n={n}, density={density}.")
    rng = np.random.default_rng(seed)
    width = len(str(max(n - 1, 0)))
    labels = tuple(f"t{i:0{width}d}" for i in range(n))
    order = rng.permutation(n)
    pairs = [
        (labels[order[i]], labels[order[j]])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    closed = TaskReachability.from_pairs(labels, pairs).closure()
    return PosetSpec(labels, frozenset(closed.pairs()))


def iter_posets(n: int, max_tasks: int = BRUTE_FORCE_MAX_TASKS) -> Iterator[PosetSpec]:
    """Yields every partial order over `n` labeled tasks ``a, b, ...``."""
    if n > max_tasks:
        raise TooLargeError(f"Poset enumeration is limited to {max_tasks} tasks, got {n}.")
    labels = tuple(string.ascii_lowercase[:n])
    pairs = list(permutations(labels, 2))
    for mask in range(1 << len(pairs)):
        relation = frozenset(pair for bit, pair in enumerate(pairs) if mask >> bit & 1)
        if any((b, a) in relation for a, b in relation):
            continue
        if TaskReachability.from_pairs(labels, relation).is_transitive():
            yield PosetSpec(labels, relation)


def confluence_trial(p: PosetSpec, orders: int, seed: int) -> bool:
    """Checks that the simplification output does not depend on rule order.

    The canonical graph of `p` is simplified `orders` times with uniformly random rule
    choices, and once with the matrix-driven engine. A divergence is reported as a warning
    carrying both traces.

    Args:
        p: The partial order to expand.
        orders: The number of randomized simplifications.
        seed: The random seed for rule choices.

    Returns:
        True if every output is the same.
    """
    g = expand_aon(p.to_aon())
    rng = np.random.default_rng(seed)
    reference, reference_trace = simplify_optimized(g)
    for _ in range(orders):
        output, trace = simplify_naive(g, rng=rng)
        if not same_output(reference, output):
            warnings.warn(
                f"Simplification of {p.n_tasks} tasks diverged: {trace} vs {reference_trace}.",
                stacklevel=2,
            )
            return False
    logger.debug("Confluence held over %d orders for %d tasks.", orders, p.n_tasks)
    return True
