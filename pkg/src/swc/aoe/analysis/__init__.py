"""Modules for verifying, scheduling, and benchmarking simplified graphs."""
