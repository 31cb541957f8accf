"""Tests for the `swc.aoe.graph.core` module."""

import pytest

from swc.aoe.graph.core import (
    AoeGraph,
    AonGraph,
    Edge,
    TaskReachability,
    VertexReachability,
    end,
    equivalent,
    is_acyclic,
    merge_vertices,
    potential_critical_paths,
    st,
    task_reachability,
    task_reaches,
    topological_order,
)
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
)


def chain(*tasks: str) -> AoeGraph:
    """Returns a path graph whose i-th edge carries the i-th task."""
    return AoeGraph(range(len(tasks) + 1), (Edge(i, i + 1, task) for i, task in enumerate(tasks)))


class TestAoeGraph:
    """Tests for the multigraph model."""

    def test_unlabeled_edges_are_coalesced(self):
        """Test that a repeated unlabeled edge is stored once."""
        g = AoeGraph()
        g.add_edge(0, 1)
        g.add_edge(0, 1)
        assert g.multiplicity(0, 1) == 1
        assert g.unlabeled_edges == [Edge(0, 1)]

    def test_parallel_task_edges_are_kept(self):
        """Test that task edges between the same pair are not coalesced."""
        g = AoeGraph(edges=[Edge(0, 1, "a"), Edge(0, 1, "b"), Edge(0, 1)])
        assert g.multiplicity(0, 1) == 3
        assert g.out_tasks(0) == ["a", "b"]

    def test_self_loop(self):
        """Test that self-loops are rejected."""
        with pytest.raises(SelfLoopError):
            AoeGraph().add_edge(2, 2)

    def test_duplicate_task_label(self):
        """Test that a task label cannot label two edges."""
        g = chain("a")
        with pytest.raises(DuplicateTaskLabelError, match="'a'"):
            g.add_edge(1, 2, "a")

    def test_add_vertex_allocates_next_id(self):
        """Test that vertices added without an id get the next unused one."""
        g = AoeGraph([0, 4])
        assert g.add_vertex() == 5
        with pytest.raises(ValueError, match="nonnegative"):
            g.add_vertex(-1)

    def test_remove_missing_edge(self):
        """Test that removing an absent edge raises."""
        with pytest.raises(UnknownEdgeError):
            chain("a").remove_edge(Edge(0, 1))

    def test_copy_is_independent(self):
        """Test that mutating a copy leaves the original untouched."""
        g = chain("a", "b")
        clone = g.copy()
        clone.merge(0, 2)
        assert len(g) == 3
        assert clone != g

    def test_equality_ignores_insertion_order(self):
        """Test that graphs with the same vertices and edges compare equal."""
        g = AoeGraph(edges=[Edge(0, 1, "a"), Edge(1, 2)])
        h = AoeGraph(edges=[Edge(1, 2), Edge(0, 1, "a")])
        assert g == h


class TestMerge:
    """Tests for vertex merging."""

    def test_survivor_is_smaller_id(self):
        """Test that merging names the survivor `min(u, v)` and re-targets edges."""
        g = AoeGraph(edges=[Edge(0, 3, "a"), Edge(2, 5, "b")])
        assert g.merge(3, 2) == 2
        assert g.edges == [Edge(0, 2, "a"), Edge(2, 5, "b")]

    def test_unlabeled_edge_between_merged_vertices_is_dropped(self):
        """Test that the contracted edge disappears instead of becoming a self-loop."""
        g = AoeGraph(edges=[Edge(0, 1), Edge(1, 2, "a")])
        g.merge(0, 1)
        assert g.edges == [Edge(0, 2, "a")]

    def test_coalesces_duplicates(self):
        """Test that unlabeled edges made parallel by a merge are coalesced."""
        g = AoeGraph(edges=[Edge(0, 2), Edge(1, 2), Edge(3, 0, "a"), Edge(4, 1, "b")])
        g.merge(0, 1)
        assert g.unlabeled_edges == [Edge(0, 2)]

    def test_task_edge_between_merged_vertices(self):
        """Test that a merge never contracts a task edge."""
        with pytest.raises(MergeWouldDropTaskError):
            chain("a").merge(0, 1)

    def test_merge_vertices_returns_copy(self):
        """Test that the functional merge leaves its input intact."""
        g = AoeGraph(edges=[Edge(0, 1), Edge(1, 2, "a")])
        merged = merge_vertices(g, 1, 0)
        assert len(g) == 3
        assert merged.vertices == [0, 2]


class TestAonGraph:
    """Tests for dependency descriptions."""

    def test_duplicate_task(self):
        """Test that a task cannot be declared twice."""
        with pytest.raises(DuplicateTaskError):
            AonGraph(("a", "a"))

    def test_unknown_dependency(self):
        """Test that dependencies must refer to declared tasks."""
        with pytest.raises(UnknownDepError, match="'z'"):
            AonGraph(("a",), frozenset({("z", "a")}))

    @pytest.mark.parametrize(
        "deps",
        [{("a", "a")}, {("a", "b"), ("b", "a")}],
        ids=["self-dependency", "two-cycle"],
    )
    def test_cyclic_dependencies(self, deps):
        """Test that cyclic dependencies are rejected."""
        with pytest.raises(CycleError):
            AonGraph(("a", "b"), frozenset(deps))

    def test_closure_and_reduction(self):
        """Test that closure adds implied dependencies and reduction removes them."""
        a = AonGraph(("a", "b", "c"), frozenset({("a", "b"), ("b", "c"), ("a", "c")}))
        assert a.reduction().deps == {("a", "b"), ("b", "c")}
        assert a.reduction().closure().deps == a.deps


class TestPredicates:
    """Tests for acyclicity and topological order."""

    def test_single_vertex_is_acyclic(self):
        """Test the empty edge case."""
        assert is_acyclic(AoeGraph([0]))

    def test_two_cycle(self):
        """Test that unlabeled edges in both directions form a cycle."""
        g = AoeGraph(edges=[Edge(0, 1), Edge(1, 0)])
        assert not is_acyclic(g)
        with pytest.raises(CycleError):
            topological_order(g)

    @pytest.mark.parametrize(
        ("g", "expected"),
        [
            (AoeGraph(edges=[Edge(0, 5), Edge(5, 2)]), [0, 5, 2]),
            (AoeGraph([3, 1]), [1, 3]),
            (AoeGraph(edges=[Edge(0, 2, "a"), Edge(0, 1, "b"), Edge(2, 3), Edge(1, 3)]), [0, 1, 2, 3]),
        ],
        ids=["chain", "isolated vertices", "diamond"],
    )
    def test_topological_order(self, g, expected):
        """Test that ties are broken by ascending vertex id."""
        assert topological_order(g) == expected

    def test_canonical_graph_is_acyclic(self, canonical_zigzag):
        """Test that expansion yields an acyclic graph."""
        assert is_acyclic(canonical_zigzag)


class TestTaskReachability:
    """Tests for task endpoints and the reachability relation."""

    def test_endpoints(self, canonical_single):
        """Test that a canonical task has distinct fresh endpoints."""
        assert st(canonical_single, "a") != end(canonical_single, "a")

    def test_unknown_task(self, canonical_single):
        """Test that endpoints of an unknown task raise."""
        with pytest.raises(UnknownTaskError):
            st(canonical_single, "z")

    def test_shared_vertex_counts_as_reaching(self):
        """Test that a task reaches the next when its end is the other's start."""
        g = chain("a", "b")
        assert task_reaches(g, "a", "b")
        assert not task_reaches(g, "b", "a")

    def test_parallel_tasks(self, canonical_parallel):
        """Test that independent tasks do not reach each other."""
        assert not task_reaches(canonical_parallel, "a", "b")
        assert len(task_reachability(canonical_parallel)) == 0

    def test_same_task(self, canonical_single):
        """Test that reachability is undefined between a task and itself."""
        with pytest.raises(SameTaskError):
            task_reaches(canonical_single, "a", "a")

    def test_relation_of_zigzag(self, canonical_zigzag):
        """Test the relation read off the canonical zigzag graph."""
        relation = task_reachability(canonical_zigzag)
        assert relation.pairs() == {("a", "c"), ("a", "d"), ("b", "d")}
        assert relation.is_irreflexive()
        assert relation.is_transitive()

    def test_relation_matches_pairwise_queries(self, canonical_zigzag):
        """Test that the matrix agrees with one query per ordered pair."""
        relation = task_reachability(canonical_zigzag)
        for t in relation.labels:
            for u in relation.labels:
                if t != u:
                    assert ((t, u) in relation) == task_reaches(canonical_zigzag, t, u)

    def test_closure(self):
        """Test the transitive closure of a relation."""
        relation = TaskReachability.from_pairs("abc", [("a", "b"), ("b", "c")])
        assert not relation.is_transitive()
        assert relation.closure().pairs() == {("a", "b"), ("b", "c"), ("a", "c")}

    def test_to_frame(self):
        """Test that the relation tabulates with labels on both axes."""
        frame = TaskReachability.from_pairs("ab", [("a", "b")]).to_frame()
        assert frame.loc["a", "b"]
        assert not frame.loc["b", "a"]

    def test_vertex_reachability_is_strict(self):
        """Test that a vertex does not reach itself."""
        reach = VertexReachability(chain("a", "b"))
        assert reach(0, 2)
        assert not reach(1, 1)
        assert reach.descendants(0) == {1, 2}


class TestCriticalPaths:
    """Tests for potential critical paths and equivalence."""

    def test_zigzag(self, canonical_zigzag):
        """Test the maximal chains of the zigzag relation."""
        assert potential_critical_paths(canonical_zigzag) == {("a", "c"), ("a", "d"), ("b", "d")}

    def test_parallel(self, canonical_parallel):
        """Test that unrelated tasks are their own paths."""
        assert potential_critical_paths(canonical_parallel) == {("a",), ("b",)}

    def test_size_limit(self, canonical_zigzag):
        """Test that enumeration refuses graphs over the task cap."""
        with pytest.raises(SizeLimitExceededError):
            potential_critical_paths(canonical_zigzag, max_tasks=3)

    def test_equivalent(self, canonical_chain):
        """Test that a graph is equivalent to its hand-simplified chain but not to a reversal."""
        assert equivalent(canonical_chain, chain("a", "b"))
        assert not equivalent(canonical_chain, chain("b", "a"))
        assert not equivalent(canonical_chain, chain("a"))
