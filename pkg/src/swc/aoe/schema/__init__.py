"""Modules for document and configuration models."""

# Set imports available directly under 'swc.aoe.schema'
from swc.aoe.schema.base import BaseSchema
from swc.aoe.schema.config import Settings, load_settings
from swc.aoe.schema.documents import AoeDocument, AonDocument, DurationsDocument, TimelineDocument

__all__ = [
    "AoeDocument",
    "AonDocument",
    "BaseSchema",
    "DurationsDocument",
    "Settings",
    "TimelineDocument",
    "load_settings",
]
