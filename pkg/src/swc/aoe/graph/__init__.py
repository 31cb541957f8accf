"""Modules for building and simplifying activity-on-edge graphs."""

# Set imports available directly under 'swc.aoe.graph'
from swc.aoe.graph.canonical import canonicalize_aoe, expand_aon
from swc.aoe.graph.core import (
    AoeGraph,
    AonGraph,
    Edge,
    TaskReachability,
    end,
    equivalent,
    is_acyclic,
    st,
    task_reachability,
    topological_order,
)
from swc.aoe.graph.engine import simplify, simplify_optimized
from swc.aoe.graph.rules import RuleApplication, RuleKind, simplify_naive

__all__ = [
    "AoeGraph",
    "AonGraph",
    "Edge",
    "RuleApplication",
    "RuleKind",
    "TaskReachability",
    "canonicalize_aoe",
    "end",
    "equivalent",
    "expand_aon",
    "is_acyclic",
    "simplify",
    "simplify_naive",
    "simplify_optimized",
    "st",
    "task_reachability",
    "topological_order",
]
