"""Construction of canonical activity-on-edge graphs."""

import logging

from swc.aoe.graph.core import AoeGraph, AonGraph, task_reachability

logger = logging.getLogger(__name__)


def expand_aon(a: AonGraph, reduce: bool = True) -> AoeGraph:
    """Expands a dependency description into its canonical activity-on-edge graph.

    Each task becomes a task edge between two fresh milestone vertices, and each dependency
    ``(T, T')`` becomes an unlabeled edge from the end of `T` to the start of `T'`. A
    super-source is then joined to every vertex without incoming edges, and every vertex
    without outgoing edges is joined to a super-sink.

    Vertex ids are assigned as follows: the super-source is 0, task ``i`` (in declaration
    order) starts at ``2i + 1`` and ends at ``2i + 2``, and the super-sink is ``2n + 1``.
    An empty description expands to the single edge ``0 -> 1``.

    Args:
        a: The dependency description to expand.
        reduce: If True, only the transitive reduction of the dependencies is expanded.
            Otherwise every dependency gets its own unlabeled edge.

    Returns:
        The canonical activity-on-edge graph.
    """
    if reduce:
        a = a.reduction()
    g = AoeGraph()
    source = g.add_vertex(0)
    sink = 2 * len(a.tasks) + 1
    starts, ends = {}, {}
    for i, task in enumerate(a.tasks):
        starts[task], ends[task] = 2 * i + 1, 2 * i + 2
        g.add_edge(starts[task], ends[task], task)
    for before, after in sorted(a.deps):
        g.add_edge(ends[before], starts[after])
    g.add_vertex(sink)
    for vertex in g.vertices:
        if vertex not in (source, sink) and g.in_degree(vertex) == 0:
            g.add_edge(source, vertex)
    for vertex in g.vertices:
        if vertex not in (source, sink) and g.out_degree(vertex) == 0:
            g.add_edge(vertex, sink)
    if not a.tasks:
        g.add_edge(source, sink)
    logger.debug("Expanded %d tasks into %d vertices.", len(a.tasks), len(g))
    return g


def canonicalize_aoe(g: AoeGraph) -> AoeGraph:
    """Returns the canonical activity-on-edge graph with the same task reachability as `g`.

    The task reachability relation of `g` is read off as a dependency description, which is
    then expanded. Only task labels and reachability survive; vertex identities do not.
    """
    return expand_aon(task_reachability(g).to_aon())
