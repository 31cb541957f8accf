"""Exceptions raised when building, rewriting, or reading activity-on-edge graphs."""


class AoeError(Exception):
    """Base class for all errors raised by the aoe package."""


class CycleError(AoeError, ValueError):
    """Raised when a graph or dependency relation contains a directed cycle."""


class CyclicDepsError(CycleError):
    """Raised when task dependencies form a cycle."""


class SelfLoopError(AoeError, ValueError):
    """Raised when an edge would start and end at the same vertex."""


class DuplicateTaskLabelError(AoeError, ValueError):
    """Raised when two edges of one graph carry the same task label."""


class DuplicateTaskError(AoeError, ValueError):
    """Raised when a dependency description lists the same task twice."""


class UnknownDepError(AoeError, KeyError):
    """Raised when a task depends on a task that is not declared."""


class UnknownTaskError(AoeError, KeyError):
    """Raised when a task label does not exist in the graph."""


class UnknownVertexError(AoeError, KeyError):
    """Raised when a vertex id is not live in the graph."""


class UnknownEdgeError(AoeError, KeyError):
    """Raised when an edge is not present in the graph."""


class SameTaskError(AoeError, ValueError):
    """Raised when a relation between two tasks is queried for a single task."""


class NotUnlabeledError(AoeError, ValueError):
    """Raised when a rule that only applies to unlabeled edges is given a task edge."""


class MergeWouldDropTaskError(AoeError, ValueError):
    """Raised when merging two vertices would contract a task edge."""


class RuleNotApplicableError(AoeError, ValueError):
    """Raised when a rule application is requested whose precondition does not hold."""


class SizeLimitExceededError(AoeError, ValueError):
    """Raised when an exponential enumeration is requested on a graph that is too large."""


class TooLargeError(SizeLimitExceededError):
    """Raised when the brute-force minimality search exceeds its task cap."""


class NotSaturatedError(AoeError, ValueError):
    """Raised when a simplification output is expected but a rule still applies."""


class MissingDurationError(AoeError, KeyError):
    """Raised when a task has no duration assigned."""


class InvariantError(AoeError, AssertionError):
    """Raised when invariant checking detects a rule application that broke an invariant."""


class ParseError(AoeError, ValueError):
    """Raised when a document cannot be parsed.

    Attributes:
        field (str | None): Dotted path of the offending field, if known.
        line (int | None): Line number of the offending text, if known.
    """

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        """Initializes the error with a message and an optional location."""
        location = []
        if field:
            location.append(f"field '{field}'")
        if line is not None:
            location.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(location)})" if location else message)
        self.field = field
        self.line = line
