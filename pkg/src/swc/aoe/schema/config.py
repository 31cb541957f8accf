"""Configuration of the command-line tools."""

from os import PathLike
from typing import Literal

from pydantic import Field, NonNegativeInt
from pydantic_yaml import parse_yaml_file_as

from swc.aoe.schema.base import BaseSchema


class Settings(BaseSchema):
    """Tunable parameters, loaded from a YAML file with camel-case or snake-case keys."""

    engine: Literal["naive", "optimized"] = Field(
        default="optimized", description="Simplification engine used when none is requested."
    )
    check_invariants: bool = Field(
        default=False, description="Verify acyclicity and task reachability after every rewrite."
    )
    max_path_tasks: NonNegativeInt = Field(
        default=20, description="Largest graph, in tasks, whose critical paths may be enumerated."
    )
    brute_force_max_tasks: NonNegativeInt = Field(
        default=4, description="Largest relation, in tasks, for the brute-force minimality search."
    )
    density: float = Field(default=0.3, ge=0, le=1, description="Default dependency density.")
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")


def load_settings(path: str | PathLike | None = None) -> Settings:
    """Loads settings from a YAML file, or returns the defaults if no path is given."""
    if path is None:
        return Settings()
    return parse_yaml_file_as(Settings, path)
