"""Activity-on-edge graph model, structural predicates, and task reachability."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from typing import Final, Self

import networkx as nx
import numpy as np
import pandas as pd

from swc.aoe.graph.errors import (
    CycleError,
    DuplicateTaskError,
    DuplicateTaskLabelError,
    MergeWouldDropTaskError,
    SameTaskError,
    SelfLoopError,
    SizeLimitExceededError,
    UnknownDepError,
    UnknownEdgeError,
    UnknownTaskError,
    UnknownVertexError,
)

UNLABELED: Final = ""
"""Multigraph key of the unlabeled edge between an ordered vertex pair.

Task labels are nonempty, so the empty key never collides with a task edge, and because
keys are unique per ordered pair there is at most one unlabeled edge between two vertices.
"""

MAX_PATH_TASKS = 20
"""Default task cap for potential critical path enumeration."""


@dataclass(frozen=True)
class Edge:
    """A directed edge of an activity-on-edge graph.

    Attributes:
        tail: The vertex the edge leaves.
        head: The vertex the edge enters.
        task: The task label, or ``None`` for an unlabeled edge.
    """

    tail: int
    head: int
    task: str | None = None

    @property
    def key(self) -> str:
        """The multigraph key identifying this edge between its endpoints."""
        return UNLABELED if self.task is None else self.task

    @property
    def is_task(self) -> bool:
        """Whether the edge represents a task."""
        return self.task is not None

    def sort_key(self) -> tuple[int, int, str]:
        """Returns the deterministic ordering key of the edge."""
        return self.tail, self.head, self.key


class AoeGraph:
    """A directed acyclic multigraph with task-labeled and unlabeled edges.

    Vertices are small nonnegative integers. Every task label occurs on exactly one edge.
    Parallel unlabeled edges between the same ordered pair are coalesced on insertion,
    while parallel task edges are kept.

    Mutating methods (`add_vertex`, `add_edge`, `remove_edge`, `merge`) change the graph
    in place; the module-level operations return new graphs.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Edge] = ()):
        """Initializes the graph with the specified vertices and edges."""
        self._graph = nx.MultiDiGraph()
        self._tasks: dict[str, Edge] = {}
        for vertex in vertices:
            self.add_vertex(vertex)
        for edge in edges:
            self.add_edge(edge.tail, edge.head, edge.task)

    @property
    def graph(self) -> nx.MultiDiGraph:
        """The underlying networkx multigraph. Must be treated as read-only."""
        return self._graph

    @property
    def vertices(self) -> list[int]:
        """The live vertices, in ascending order."""
        return sorted(self._graph.nodes)

    @property
    def edges(self) -> list[Edge]:
        """All edges, in deterministic order."""
        edges = [Edge(u, v, key or None) for u, v, key in self._graph.edges(keys=True)]
        return sorted(edges, key=Edge.sort_key)

    @property
    def unlabeled_edges(self) -> list[Edge]:
        """The unlabeled edges, in deterministic order."""
        return [edge for edge in self.edges if not edge.is_task]

    @property
    def tasks(self) -> list[str]:
        """The task labels, in ascending order."""
        return sorted(self._tasks)

    def __len__(self) -> int:
        """Returns the number of live vertices."""
        return self._graph.number_of_nodes()

    def __contains__(self, vertex: object) -> bool:
        """Returns whether the vertex is live in the graph."""
        return vertex in self._graph

    def __eq__(self, other: object) -> bool:
        """Returns whether both graphs have the same vertices and the same edge multiset."""
        if not isinstance(other, AoeGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        """Returns a summary of the graph size."""
        return (
            f"AoeGraph(vertices={len(self)}, tasks={len(self._tasks)}, "
            f"unlabeled={self._graph.number_of_edges() - len(self._tasks)})"
        )

    def copy(self) -> Self:
        """Returns an independent copy of the graph."""
        clone = type(self)()
        clone._graph = self._graph.copy()
        clone._tasks = dict(self._tasks)
        return clone

    def add_vertex(self, vertex: int | None = None) -> int:
        """Adds a vertex to the graph.

        Args:
            vertex: The vertex id. If not specified, the next unused id is allocated.

        Returns:
            The id of the added vertex.
        """
        if vertex is None:
            vertex = max(self._graph.nodes, default=-1) + 1
        elif vertex < 0:
            raise ValueError(f"Vertex ids must be nonnegative, got {vertex}.")
        self._graph.add_node(vertex)
        return vertex

    def add_edge(self, tail: int, head: int, task: str | None = None) -> Edge:
        """Adds an edge, creating its endpoints if needed.

        Args:
            tail: The vertex the edge leaves.
            head: The vertex the edge enters.
            task: The task label, or ``None`` for an unlabeled edge.

        Returns:
            The added edge. Adding an unlabeled edge that already exists is a no-op.
        """
        if tail == head:
            raise SelfLoopError(f"Edge ({tail}, {head}) is a self-loop.")
        if task is not None:
            if not task:
                raise ValueError("Task labels must be nonempty.")
            if task in self._tasks:
                raise DuplicateTaskLabelError(f"Task '{task}' already labels an edge.")
        edge = Edge(tail, head, task)
        for vertex in (tail, head):
            if vertex not in self._graph:
                self.add_vertex(vertex)
        self._graph.add_edge(tail, head, key=edge.key)
        if task is not None:
            self._tasks[task] = edge
        return edge

    def has_edge(self, edge: Edge) -> bool:
        """Returns whether the edge is present."""
        return self._graph.has_edge(edge.tail, edge.head, key=edge.key)

    def remove_edge(self, edge: Edge) -> None:
        """Removes an edge from the graph."""
        if not self.has_edge(edge):
            raise UnknownEdgeError(f"Edge {edge} is not in the graph.")
        self._graph.remove_edge(edge.tail, edge.head, key=edge.key)
        if edge.task is not None:
            del self._tasks[edge.task]

    def task_edge(self, task: str) -> Edge:
        """Returns the edge labeled with the specified task."""
        try:
            return self._tasks[task]
        except KeyError:
            raise UnknownTaskError(f"Task '{task}' is not in the graph.") from None

    def check_vertex(self, vertex: int) -> None:
        """Raises `UnknownVertexError` if the vertex is not live."""
        if vertex not in self._graph:
            raise UnknownVertexError(f"Vertex {vertex} is not in the graph.")

    def successors(self, vertex: int) -> set[int]:
        """Returns the outgoing neighbors of a vertex over all edges."""
        return set(self._graph.successors(vertex))

    def predecessors(self, vertex: int) -> set[int]:
        """Returns the incoming neighbors of a vertex over all edges."""
        return set(self._graph.predecessors(vertex))

    def out_degree(self, vertex: int) -> int:
        """Returns the number of edges leaving a vertex."""
        return self._graph.out_degree(vertex)

    def in_degree(self, vertex: int) -> int:
        """Returns the number of edges entering a vertex."""
        return self._graph.in_degree(vertex)

    def multiplicity(self, tail: int, head: int) -> int:
        """Returns the number of edges from `tail` to `head`."""
        return self._graph.number_of_edges(tail, head)

    def out_tasks(self, vertex: int) -> list[str]:
        """Returns the labels of the tasks starting at a vertex."""
        return sorted(key for _, _, key in self._graph.out_edges(vertex, keys=True) if key)

    def in_tasks(self, vertex: int) -> list[str]:
        """Returns the labels of the tasks ending at a vertex."""
        return sorted(key for _, _, key in self._graph.in_edges(vertex, keys=True) if key)

    def has_outgoing_task(self, vertex: int) -> bool:
        """Returns whether a task starts at the vertex."""
        return any(key for _, _, key in self._graph.out_edges(vertex, keys=True))

    def has_incoming_task(self, vertex: int) -> bool:
        """Returns whether a task ends at the vertex."""
        return any(key for _, _, key in self._graph.in_edges(vertex, keys=True))

    def merge(self, u: int, v: int) -> int:
        """Merges two vertices in place.

        The survivor is ``min(u, v)``. Edges of the removed vertex are re-targeted to the
        survivor, unlabeled edges between `u` and `v` are dropped, and unlabeled edges that
        become parallel are coalesced.

        Args:
            u: The first vertex.
            v: The second vertex.

        Returns:
            The id of the surviving vertex.
        """
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise ValueError(f"Cannot merge vertex {u} with itself.")
        between = [
            key for a, b in ((u, v), (v, u)) if self._graph.has_edge(a, b) for key in self._graph[a][b]
        ]
        if any(between):
            raise MergeWouldDropTaskError(f"Merging {u} and {v} would contract task '{max(between)}'.")
        keep, gone = min(u, v), max(u, v)
        outgoing = self._graph.out_edges(gone, keys=True)
        incoming = self._graph.in_edges(gone, keys=True)
        moved = [(keep, head, key) for _, head, key in outgoing if head != keep]
        moved += [(tail, keep, key) for tail, _, key in incoming if tail != keep]
        self._graph.remove_node(gone)
        for tail, head, key in moved:
            self._graph.add_edge(tail, head, key=key)
            if key:
                self._tasks[key] = Edge(tail, head, key)
        return keep


@dataclass(frozen=True)
class AonGraph:
    """An activity-on-node dependency description over task labels.

    Attributes:
        tasks: The task labels, in declaration order.
        deps: Ordered pairs ``(a, b)`` meaning task `a` precedes task `b`.
    """

    tasks: tuple[str, ...]
    deps: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        """Validates that labels are unique, dependencies are declared and acyclic."""
        object.__setattr__(self, "tasks", tuple(self.tasks))
        object.__setattr__(self, "deps", frozenset(self.deps))
        seen = set()
        for task in self.tasks:
            if not task:
                raise ValueError("Task labels must be nonempty.")
            if task in seen:
                raise DuplicateTaskError(f"Task '{task}' is declared more than once.")
            seen.add(task)
        for before, after in self.deps:
            for label in (before, after):
                if label not in seen:
                    raise UnknownDepError(
                        f"Dependency ({before}, {after}) refers to unknown task '{label}'."
                    )
            if before == after:
                raise CycleError(f"Task '{before}' depends on itself.")
        if not nx.is_directed_acyclic_graph(self.to_networkx()):
            raise CycleError("Task dependencies contain a cycle.")

    def to_networkx(self) -> nx.DiGraph:
        """Returns the dependency digraph."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.tasks)
        graph.add_edges_from(self.deps)
        return graph

    def closure(self) -> "AonGraph":
        """Returns the graph whose dependencies are the transitive closure of these."""
        closed = nx.transitive_closure_dag(self.to_networkx())
        return AonGraph(self.tasks, frozenset(closed.edges))

    def reduction(self) -> "AonGraph":
        """Returns the graph whose dependencies are the transitive reduction of these."""
        reduced = nx.transitive_reduction(self.to_networkx())
        return AonGraph(self.tasks, frozenset(reduced.edges))


class TaskReachability:
    """The task reachability relation of a graph, as a boolean matrix over sorted labels."""

    def __init__(self, labels: Iterable[str], matrix: np.ndarray | None = None):
        """Initializes the relation over the specified labels, empty unless a matrix is given."""
        self.labels = tuple(sorted(labels))
        self.index = {label: i for i, label in enumerate(self.labels)}
        n = len(self.labels)
        self.matrix = np.zeros((n, n), dtype=bool) if matrix is None else np.asarray(matrix, dtype=bool)
        if self.matrix.shape != (n, n):
            raise ValueError(f"Relation matrix must have shape {(n, n)}, got {self.matrix.shape}.")

    @classmethod
    def from_pairs(cls, labels: Iterable[str], pairs: Iterable[tuple[str, str]]) -> Self:
        """Builds the relation from the specified ordered pairs."""
        relation = cls(labels)
        for before, after in pairs:
            relation.matrix[relation.index[before], relation.index[after]] = True
        return relation

    def __contains__(self, pair: object) -> bool:
        """Returns whether the ordered pair of labels is related."""
        if not isinstance(pair, tuple) or len(pair) != 2:  # noqa: PLR2004
            return False
        before, after = pair
        if before not in self.index or after not in self.index:
            return False
        return bool(self.matrix[self.index[before], self.index[after]])

    def __eq__(self, other: object) -> bool:
        """Returns whether both relations have the same labels and the same related pairs."""
        if not isinstance(other, TaskReachability):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.matrix, other.matrix)

    __hash__ = None  # type: ignore[assignment]

    def __len__(self) -> int:
        """Returns the number of related pairs."""
        return int(self.matrix.sum())

    def __repr__(self) -> str:
        """Returns the related pairs."""
        return f"TaskReachability({sorted(self.pairs())})"

    def pairs(self) -> set[tuple[str, str]]:
        """Returns the set of related ordered pairs."""
        return {(self.labels[i], self.labels[j]) for i, j in zip(*np.nonzero(self.matrix), strict=True)}

    def closure(self) -> "TaskReachability":
        """Returns the transitive closure of the relation."""
        closed = self.matrix.copy()
        for k in range(len(self.labels)):
            closed |= np.outer(closed[:, k], closed[k, :])
        return TaskReachability(self.labels, closed)

    def is_irreflexive(self) -> bool:
        """Returns whether no label is related to itself."""
        return not self.matrix.diagonal().any()

    def is_transitive(self) -> bool:
        """Returns whether the relation equals its transitive closure."""
        return self == self.closure()

    def to_aon(self) -> AonGraph:
        """Returns the dependency description whose dependencies are the related pairs."""
        return AonGraph(self.labels, frozenset(self.pairs()))

    def to_frame(self) -> pd.DataFrame:
        """Returns the relation as a boolean DataFrame indexed by label on both axes."""
        return pd.DataFrame(self.matrix, index=pd.Index(self.labels), columns=pd.Index(self.labels))


class VertexReachability:
    """Strict vertex reachability (paths of one or more edges) over all edges of a graph."""

    def __init__(self, g: AoeGraph):
        """Computes the reachability of every vertex in one reverse topological sweep."""
        order = topological_order(g)
        self.index = {vertex: i for i, vertex in enumerate(order)}
        self.matrix = np.zeros((len(order), len(order)), dtype=bool)
        for vertex in reversed(order):
            row = self.matrix[self.index[vertex]]
            for successor in g.graph.successors(vertex):
                j = self.index[successor]
                row |= self.matrix[j]
                row[j] = True
        self._vertices = order

    def __call__(self, u: int, v: int) -> bool:
        """Returns whether a path of one or more edges leads from `u` to `v`."""
        return bool(self.matrix[self.index[u], self.index[v]])

    def descendants(self, u: int) -> set[int]:
        """Returns the vertices reachable from `u`."""
        return {self._vertices[j] for j in np.flatnonzero(self.matrix[self.index[u]])}


def is_acyclic(g: AoeGraph) -> bool:
    """Returns whether the graph has no directed cycle over task and unlabeled edges."""
    return nx.is_directed_acyclic_graph(g.graph)


def topological_order(g: AoeGraph) -> list[int]:
    """Sorts the vertices in topological order.

    Ties are broken by ascending vertex id, so the order is the lexicographically smallest one.

    Args:
        g: The graph to sort.

    Returns:
        The vertices, each edge leading from an earlier to a later position.
    """
    try:
        return list(nx.lexicographical_topological_sort(g.graph))
    except nx.NetworkXUnfeasible as err:
        raise CycleError("Graph contains a cycle.") from err


def st(g: AoeGraph, task: str) -> int:
    """Returns the start vertex of a task."""
    return g.task_edge(task).tail


def end(g: AoeGraph, task: str) -> int:
    """Returns the end vertex of a task."""
    return g.task_edge(task).head


def task_reaches(g: AoeGraph, task: str, other: str) -> bool:
    """Returns whether a task has a path to another task.

    A task reaches another if its end vertex is the start vertex of the other task, or if a
    directed path leads from the end of the first task to the start of the other.

    Args:
        g: The graph containing both tasks.
        task: The preceding task.
        other: The following task.

    Returns:
        True if `task` reaches `other`.
    """
    if task == other:
        raise SameTaskError(f"Task reachability is only defined between distinct tasks, got '{task}'.")
    source, target = end(g, task), st(g, other)
    return source == target or nx.has_path(g.graph, source, target)


def task_reachability(g: AoeGraph) -> TaskReachability:
    """Returns the reachability relation between all ordered pairs of distinct tasks."""
    reach = VertexReachability(g)
    relation = TaskReachability(g.tasks)
    ends = [reach.index[end(g, task)] for task in relation.labels]
    starts = [reach.index[st(g, task)] for task in relation.labels]
    if ends:
        joined = np.equal.outer(ends, starts) | reach.matrix[np.ix_(ends, starts)]
        np.fill_diagonal(joined, False)
        relation.matrix[:] = joined
    return relation


def potential_critical_paths(g: AoeGraph, max_tasks: int = MAX_PATH_TASKS) -> set[tuple[str, ...]]:
    """Enumerates the potential critical paths of a graph.

    A potential critical path is a maximal sequence of tasks where each task reaches the next.
    Since reachability is transitive, these are the maximal chains of the relation, i.e. the
    paths from minimal to maximal tasks through its covering pairs.

    Args:
        g: The graph to enumerate. The output may be exponential in the number of tasks.
        max_tasks: The largest task count accepted.

    Returns:
        The set of potential critical paths, each as a tuple of task labels.
    """
    if len(g.tasks) > max_tasks:
        raise SizeLimitExceededError(
            f"Critical path enumeration is limited to {max_tasks} tasks, graph has {len(g.tasks)}."
        )
    hasse = nx.transitive_reduction(task_reachability(g).to_aon().to_networkx())
    paths: set[tuple[str, ...]] = set()

    def extend(path: list[str]) -> Iterator[tuple[str, ...]]:
        successors = sorted(hasse.successors(path[-1]))
        if not successors:
            yield tuple(path)
        for successor in successors:
            yield from extend([*path, successor])

    for task in sorted(hasse.nodes):
        if hasse.in_degree(task) == 0:
            paths.update(extend([task]))
    return paths


def equivalent(g: AoeGraph, h: AoeGraph) -> bool:
    """Returns whether two graphs have the same tasks and the same potential critical paths.

    Critical paths are preserved exactly when task reachability is, so the paths themselves
    are never enumerated.
    """
    return g.tasks == h.tasks and task_reachability(g) == task_reachability(h)


def merge_vertices(g: AoeGraph, u: int, v: int) -> AoeGraph:
    """Returns a copy of the graph with `u` and `v` merged into ``min(u, v)``."""
    merged = g.copy()
    merged.merge(u, v)
    return merged
