"""Exact ramification-type invariants, fine Artin conductors, and tame counting."""

__version__ = "0.1.0"
