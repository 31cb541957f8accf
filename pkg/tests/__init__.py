"""Contains all test modules."""
