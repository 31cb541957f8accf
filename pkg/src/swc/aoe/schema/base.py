"""Base class for document and configuration models."""

from pydantic import BaseModel, ConfigDict
from pydantic.alias_generators import to_camel, to_pascal


class BaseSchema(BaseModel):
    """The base class for all document and configuration models."""

    model_config = ConfigDict(
        alias_generator=to_camel,
        field_title_generator=lambda n, _: to_pascal(n),
        populate_by_name=True,
        from_attributes=True,
        extra="forbid",
    )
