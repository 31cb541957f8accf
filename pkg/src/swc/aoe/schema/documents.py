"""Models for the structured text documents read and written by the command-line tools."""

from typing import Annotated

from pydantic import Field, NonNegativeInt, PositiveFloat

from swc.aoe.schema.base import BaseSchema

TaskId = Annotated[str, Field(min_length=1)]


class TaskRecord(BaseSchema):
    """A task and the tasks it depends on."""

    id: TaskId = Field(description="Unique label of the task.")
    deps: list[TaskId] = Field(default_factory=list, description="Labels of the preceding tasks.")


class AonDocument(BaseSchema):
    """A task dependency description."""

    tasks: list[TaskRecord]


class EdgeRecord(BaseSchema):
    """An edge of an activity-on-edge graph."""

    from_: NonNegativeInt = Field(alias="from", description="Vertex the edge leaves.")
    to: NonNegativeInt = Field(description="Vertex the edge enters.")
    task: TaskId | None = Field(default=None, description="Task label, or null for an unlabeled edge.")


class AoeDocument(BaseSchema):
    """An activity-on-edge graph."""

    vertices: list[NonNegativeInt]
    edges: list[EdgeRecord]


class DurationsDocument(BaseSchema):
    """Task durations in abstract time units."""

    durations: dict[TaskId, PositiveFloat]


class VertexLevel(BaseSchema):
    """The scheduled time of a milestone vertex."""

    vertex: NonNegativeInt
    level: float = Field(ge=0)


class TimelineDocument(BaseSchema):
    """Milestone levels, makespan, and critical tasks of a scheduled graph."""

    levels: list[VertexLevel]
    makespan: float = Field(ge=0)
    critical_tasks: list[TaskId]


class RuleRecord(BaseSchema):
    """A rule application in a simplification trace."""

    kind: str
    subjects: tuple[NonNegativeInt, NonNegativeInt]
