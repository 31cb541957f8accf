"""Modules for reading and writing graph documents and drawings."""
