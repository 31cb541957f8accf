"""Tests for the `swc.aoe.analysis.oracle` module."""

import pytest

from swc.aoe.analysis.oracle import (
    PosetSpec,
    VertexSignature,
    brute_force_min,
    confluence_trial,
    is_saturated,
    iter_posets,
    random_poset,
    renumber,
    same_output,
    signatures,
)
from swc.aoe.graph.core import AoeGraph, Edge, TaskReachability, task_reachability
from swc.aoe.graph.errors import CycleError, NotSaturatedError, TooLargeError


@pytest.fixture
def zigzag_output():
    """Returns the simplified zigzag with shuffled vertex ids."""
    return AoeGraph(
        edges=[Edge(7, 2, "a"), Edge(7, 5, "b"), Edge(2, 5), Edge(2, 0, "c"), Edge(5, 0, "d")]
    )


@pytest.fixture
def chain_output():
    """Returns the simplified chain of `a` before `b`."""
    return AoeGraph(edges=[Edge(0, 1, "a"), Edge(1, 2, "b")])


def test_signatures(zigzag_output):
    """Test the tasks entering and leaving each vertex."""
    assert signatures(zigzag_output) == {
        7: VertexSignature((), ("a", "b")),
        2: VertexSignature(("a",), ("c",)),
        5: VertexSignature(("b",), ("d",)),
        0: VertexSignature(("c", "d"), ()),
    }


def test_renumber(zigzag_output):
    """Test that vertices are renamed in ascending signature order."""
    assert renumber(zigzag_output).edges == [
        Edge(0, 1, "a"),
        Edge(0, 2, "b"),
        Edge(1, 2),
        Edge(1, 3, "c"),
        Edge(2, 3, "d"),
    ]


def test_is_saturated(canonical_single, zigzag_output):
    """Test saturation of a simplified and a canonical graph."""
    assert is_saturated(zigzag_output)
    assert not is_saturated(canonical_single)


class TestSameOutput:
    """Tests for comparing saturated outputs."""

    def test_vertex_names_do_not_matter(self, zigzag_output):
        """Test that renumbered outputs compare the same."""
        assert same_output(zigzag_output, renumber(zigzag_output))

    def test_different_relations(self, zigzag_output, chain_output):
        """Test that outputs over different tasks differ."""
        assert not same_output(chain_output, zigzag_output)

    def test_different_structure(self, chain_output):
        """Test that outputs with the same tasks but different edges differ."""
        parallel = AoeGraph(edges=[Edge(0, 1, "a"), Edge(0, 1, "b")])
        assert not same_output(chain_output, parallel)

    def test_not_saturated(self, canonical_chain, chain_output):
        """Test that unsimplified graphs are refused."""
        with pytest.raises(NotSaturatedError):
            same_output(canonical_chain, chain_output)


class TestBruteForceMin:
    """Tests for the exhaustive minimality search."""

    @pytest.mark.parametrize(
        ("fixture_name", "expected"),
        [
            ("canonical_single", 2),
            ("canonical_parallel", 2),
            ("canonical_chain", 3),
            ("canonical_zigzag", 4),
        ],
        ids=["single", "parallel", "chain", "zigzag"],
    )
    def test_fixtures(self, fixture_name, expected, request):
        """Test the minimum vertex count of each fixture relation."""
        g = request.getfixturevalue(fixture_name)
        assert brute_force_min(task_reachability(g)) == expected

    def test_no_tasks(self):
        """Test that a graph without tasks needs one vertex."""
        assert brute_force_min(TaskReachability(())) == 1

    def test_too_large(self):
        """Test that the search refuses relations over the task cap."""
        with pytest.raises(TooLargeError):
            brute_force_min(random_poset(5, 0.5, seed=0).to_reachability())


class TestPosets:
    """Tests for partial order construction and generation."""

    def test_invalid_relations(self):
        """Test that cyclic and intransitive relations are refused."""
        with pytest.raises(CycleError):
            PosetSpec(("a", "b"), frozenset({("a", "b"), ("b", "a")}))
        with pytest.raises(ValueError, match="transitive"):
            PosetSpec(("a", "b", "c"), frozenset({("a", "b"), ("b", "c")}))

    def test_random_poset_is_reproducible(self):
        """Test that equal seeds give equal orders."""
        assert random_poset(12, 0.3, seed=42) == random_poset(12, 0.3, seed=42)

    def test_random_poset_labels(self):
        """Test that labels are zero-padded to a common width."""
        p = random_poset(12, 0.3, seed=1)
        assert p.labels[0] == "t00"
        assert p.n_tasks == 12
        assert p.to_reachability().is_transitive()

    @pytest.mark.parametrize(("n", "expected"), [(0, 1), (1, 1), (2, 3), (3, 19), (4, 219)])
    def test_iter_posets_counts(self, n, expected):
        """Test the number of labeled partial orders on `n` tasks."""
        assert sum(1 for _ in iter_posets(n)) == expected

    def test_iter_posets_too_large(self):
        """Test that enumeration refuses sizes over the cap."""
        with pytest.raises(TooLargeError):
            next(iter_posets(5))


class TestConfluenceTrial:
    """Tests for the randomized order harness."""

    def test_zigzag(self):
        """Test that random rule orders agree on the zigzag."""
        p = PosetSpec(("a", "b", "c", "d"), frozenset({("a", "c"), ("a", "d"), ("b", "d")}))
        assert confluence_trial(p, orders=10, seed=3)

    def test_divergence_warns(self, mocker, chain_output):
        """Test that a diverging order is reported with both traces."""
        parallel = AoeGraph(edges=[Edge(0, 1, "a"), Edge(0, 1, "b")])
        mocker.patch("swc.aoe.analysis.oracle.simplify_naive", return_value=(parallel, []))
        p = PosetSpec(("a", "b"), frozenset({("a", "b")}))
        with pytest.warns(UserWarning, match="diverged"):
            assert not confluence_trial(p, orders=1, seed=0)
