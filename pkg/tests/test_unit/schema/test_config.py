"""Tests for settings and document schemas."""

import pytest
from pydantic import ValidationError

from swc.aoe.schema.config import Settings, load_settings
from swc.aoe.schema.documents import EdgeRecord, TimelineDocument


def test_defaults():
    """Test that no file gives the default settings."""
    settings = load_settings()
    assert settings.engine == "optimized"
    assert settings.max_path_tasks == 20
    assert settings.brute_force_max_tasks == 4


def test_load_camel_case(tmp_path):
    """Test that YAML keys may be written in camel case."""
    path = tmp_path / "settings.yml"
    path.write_text("engine: naive\ncheckInvariants: true\nmaxPathTasks: 8\n")
    settings = load_settings(path)
    assert settings == Settings(engine="naive", check_invariants=True, max_path_tasks=8)


@pytest.mark.parametrize(
    "text",
    ["engine: fast\n", "density: 1.5\n", "unknown: 1\n"],
    ids=["unknown engine", "density out of range", "extra field"],
)
def test_invalid_settings(tmp_path, text):
    """Test that invalid settings are rejected."""
    path = tmp_path / "settings.yml"
    path.write_text(text)
    with pytest.raises(ValidationError):
        load_settings(path)


def test_edge_record_alias():
    """Test that the edge tail is read from and written to the `from` key."""
    record = EdgeRecord.model_validate({"from": 1, "to": 2, "task": None})
    assert record.from_ == 1
    assert record.model_dump(by_alias=True) == {"from": 1, "to": 2, "task": None}


def test_timeline_document_alias():
    """Test that critical tasks use a camel-case key."""
    document = TimelineDocument.model_validate({"levels": [], "makespan": 0, "criticalTasks": []})
    assert document.critical_tasks == []
