"""Exact arithmetic for the braid group action on tuples of reflections."""

__version__ = "0.1.0"
