"""Exact computer algebra for N-commutators on one-variable differential operators."""

__version__ = "0.1.0"
