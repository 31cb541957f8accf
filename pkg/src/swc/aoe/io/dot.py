"""Export of activity-on-edge graphs in the DOT graph description language.

Render the output with graphviz, e.g. ``dot -Tpng -O graph.gv``.
"""

from swc.aoe.analysis.timeline import Timeline
from swc.aoe.graph.core import AoeGraph, topological_order
from swc.aoe.graph.errors import UnknownVertexError


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(g: AoeGraph, timeline: Timeline | None = None) -> str:
    """Writes the graph as a DOT digraph.

    Task edges are solid and labeled with their task; unlabeled edges are dashed. If a
    timeline is given, every vertex carries a `level` attribute and vertices sharing a level
    are grouped in a ``rank = same`` subgraph, so the drawing is leveled by time.

    Args:
        g: An acyclic graph.
        timeline: The optional schedule of the graph's vertices.

    Returns:
        The DOT text.
    """
    topological_order(g)  # raises CycleError
    lines = ["digraph aoe {", "\trankdir=LR;"]
    if timeline is None:
        lines.extend(f'\t"{v}" [label="{v}"];' for v in g.vertices)
    else:
        layers: dict[float, list[int]] = {}
        for v in g.vertices:
            if v not in timeline.level.index:
                raise UnknownVertexError(f"Vertex {v} has no level in the timeline.")
            layers.setdefault(float(timeline.level[v]), []).append(v)
        for level in sorted(layers):
            lines.append("\t{")
            lines.append("\t\trank = same;")
            lines.extend(f'\t\t"{v}" [label="{v}", level={level:.15g}];' for v in layers[level])
            lines.append("\t}")
    for e in g.edges:
        if e.task is None:
            lines.append(f'\t"{e.tail}" -> "{e.head}" [style=dashed];')
        else:
            lines.append(f'\t"{e.tail}" -> "{e.head}" [label={_quote(e.task)}, style=solid];')
    lines.append("}")
    return "\n".join(lines) + "\n"
