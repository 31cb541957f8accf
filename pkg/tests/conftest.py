"""Fixtures and configurations shared by the entire test suite."""

from pathlib import Path

import pytest

from swc.aoe.graph import AonGraph, expand_aon


@pytest.fixture
def test_data_dir():
    """Returns path to test data directory."""
    return Path(__file__).parent / "data" / "aoe"


# ==================== Dependency Fixtures ====================
@pytest.fixture
def aon_single():
    """Returns a single task `a` (F1)."""
    return AonGraph(("a",))


@pytest.fixture
def aon_parallel():
    """Returns two independent tasks `a` and `b` (F2)."""
    return AonGraph(("a", "b"))


@pytest.fixture
def aon_chain():
    """Returns the chain `a` before `b` (F3)."""
    return AonGraph(("a", "b"), frozenset({("a", "b")}))


@pytest.fixture
def aon_zigzag():
    """Returns tasks `a, b, c, d` with `a` before `c` and `d`, and `b` before `d` (F4)."""
    return AonGraph(("a", "b", "c", "d"), frozenset({("a", "c"), ("a", "d"), ("b", "d")}))


@pytest.fixture
def canonical_single(aon_single):
    """Returns the canonical graph of a single task."""
    return expand_aon(aon_single)


@pytest.fixture
def canonical_parallel(aon_parallel):
    """Returns the canonical graph of two independent tasks."""
    return expand_aon(aon_parallel)


@pytest.fixture
def canonical_chain(aon_chain):
    """Returns the canonical graph of a two-task chain."""
    return expand_aon(aon_chain)


@pytest.fixture
def canonical_zigzag(aon_zigzag):
    """Returns the canonical graph of the four-task zigzag."""
    return expand_aon(aon_zigzag)


# ========================= File Fixtures =========================
@pytest.fixture
def aon_single_file(test_data_dir):
    """Returns path to the single task dependency document."""
    return test_data_dir / "f1.json"


@pytest.fixture
def aon_parallel_file(test_data_dir):
    """Returns path to the parallel tasks dependency document."""
    return test_data_dir / "f2.json"


@pytest.fixture
def aon_chain_file(test_data_dir):
    """Returns path to the chain dependency document."""
    return test_data_dir / "f3.json"


@pytest.fixture
def aon_zigzag_file(test_data_dir):
    """Returns path to the zigzag dependency document."""
    return test_data_dir / "f4.json"


@pytest.fixture
def chain_durations_file(test_data_dir):
    """Returns path to the durations document of the chain (a=2, b=3)."""
    return test_data_dir / "f3_durations.json"


@pytest.fixture
def single_output_file(test_data_dir):
    """Returns path to the simplified single task graph."""
    return test_data_dir / "f1_output.json"


@pytest.fixture
def zigzag_output_file(test_data_dir):
    """Returns path to the simplified zigzag graph."""
    return test_data_dir / "f4_output.json"
