"""API for reading and writing graph, duration, timeline, and trace documents.

Every document is a single UTF-8 JSON object. Parsing errors carry the offending field and,
for malformed JSON, the line number.
"""

import json
from collections.abc import Iterable
from typing import TypeVar

import pandas as pd
from pydantic import BaseModel, TypeAdapter, ValidationError

from swc.aoe.analysis.oracle import renumber
from swc.aoe.analysis.timeline import Timeline
from swc.aoe.graph.canonical import expand_aon
from swc.aoe.graph.core import AoeGraph, AonGraph, is_acyclic
from swc.aoe.graph.errors import CycleError, CyclicDepsError, ParseError
from swc.aoe.graph.rules import RuleApplication
from swc.aoe.schema.documents import (
    AoeDocument,
    AonDocument,
    DurationsDocument,
    EdgeRecord,
    RuleRecord,
    TaskRecord,
    TimelineDocument,
    VertexLevel,
)

ModelT = TypeVar("ModelT", bound=BaseModel)

_TRACE_ADAPTER = TypeAdapter(list[RuleRecord])


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno) from e


def _validate(model: type[ModelT], text: str) -> ModelT:
    data = _load_json(text)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or None
        raise ParseError(f"Invalid {model.__name__}: {error['msg']}", field=field) from e


def _dump(document: BaseModel | list) -> str:
    if isinstance(document, BaseModel):
        document = document.model_dump(mode="json", by_alias=True)
    return json.dumps(document, indent=2) + "\n"


def parse_aon(text: str) -> AonGraph:
    """Parses a task dependency document.

    Args:
        text: A document of the form ``{"tasks": [{"id": ..., "deps": [...]}, ...]}``.

    Returns:
        The dependency description, with tasks in document order.

    Raises:
        ParseError: If the document is malformed.
        DuplicateTaskError: If a task id is declared twice.
        UnknownDepError: If a task depends on an undeclared id.
        CyclicDepsError: If the dependencies form a cycle.
    """
    document = _validate(AonDocument, text)
    tasks = [record.id for record in document.tasks]
    deps = {(dep, record.id) for record in document.tasks for dep in record.deps}
    try:
        return AonGraph(tuple(tasks), frozenset(deps))
    except CycleError as e:
        raise CyclicDepsError(str(e)) from e


def emit_aon(a: AonGraph) -> str:
    """Writes a dependency description as a document, listing each task's deps in task order."""
    position = {task: i for i, task in enumerate(a.tasks)}
    deps: dict[str, list[str]] = {task: [] for task in a.tasks}
    for before, after in a.deps:
        deps[after].append(before)
    records = [TaskRecord(id=task, deps=sorted(deps[task], key=position.__getitem__)) for task in a.tasks]
    return _dump(AonDocument(tasks=records))


def parse_aoe(text: str) -> AoeGraph:
    """Parses an activity-on-edge graph document.

    Parallel unlabeled edges between the same ordered pair are coalesced.

    Args:
        text: A document of the form
            ``{"vertices": [...], "edges": [{"from": ..., "to": ..., "task": ...}, ...]}``.

    Returns:
        The acyclic graph.

    Raises:
        ParseError: If the document is malformed, lists a vertex twice, or an edge refers
            to an undeclared vertex.
        SelfLoopError: If an edge starts and ends at the same vertex.
        DuplicateTaskLabelError: If two edges carry the same task.
        CycleError: If the graph has a directed cycle.
    """
    document = _validate(AoeDocument, text)
    if len(set(document.vertices)) != len(document.vertices):
        raise ParseError("A vertex is listed more than once.", field="vertices")
    declared = set(document.vertices)
    g = AoeGraph(document.vertices)
    for i, record in enumerate(document.edges):
        for name, vertex in (("from", record.from_), ("to", record.to)):
            if vertex not in declared:
                raise ParseError(f"Vertex {vertex} is not declared.", field=f"edges.{i}.{name}")
        g.add_edge(record.from_, record.to, record.task)
    if not is_acyclic(g):
        raise CycleError("The graph contains a directed cycle.")
    return g


def emit_aoe(g: AoeGraph, renumbered: bool = True) -> str:
    """Writes an activity-on-edge graph as a document.

    Args:
        g: The graph to write.
        renumbered: If True, vertices are first renumbered by ascending signature so that
            equal saturated graphs produce identical documents.

    Returns:
        The document text.
    """
    if renumbered:
        g = renumber(g)
    edges = [EdgeRecord(from_=e.tail, to=e.head, task=e.task) for e in g.edges]
    return _dump(AoeDocument(vertices=g.vertices, edges=edges))


def load_graph(text: str) -> AoeGraph:
    """Parses either document kind, expanding a dependency document into its canonical graph."""
    data = _load_json(text)
    if isinstance(data, dict) and "tasks" in data:
        return expand_aon(parse_aon(text))
    return parse_aoe(text)


def parse_durations(text: str) -> dict[str, float]:
    """Parses a document of the form ``{"durations": {task: positive number, ...}}``."""
    return dict(_validate(DurationsDocument, text).durations)


def emit_timeline(timeline: Timeline) -> str:
    """Writes a timeline as a document of vertex levels, makespan, and sorted critical tasks."""
    levels = [VertexLevel(vertex=int(v), level=float(level)) for v, level in timeline.level.items()]
    document = TimelineDocument(
        levels=levels, makespan=timeline.makespan, critical_tasks=sorted(timeline.critical_tasks)
    )
    return _dump(document)


def parse_timeline(text: str) -> Timeline:
    """Parses a timeline document."""
    document = _validate(TimelineDocument, text)
    level = pd.Series(
        {record.vertex: record.level for record in document.levels}, name="level", dtype=float
    ).sort_index()
    level.index.name = "vertex"
    return Timeline(
        level=level, makespan=document.makespan, critical_tasks=frozenset(document.critical_tasks)
    )


def emit_trace(trace: Iterable[RuleApplication]) -> str:
    """Writes a rule application trace as a list of ``{"kind", "subjects"}`` objects."""
    records = [RuleRecord(kind=str(step.kind), subjects=step.subjects) for step in trace]
    return _dump(_TRACE_ADAPTER.dump_python(records, mode="json", by_alias=True))
