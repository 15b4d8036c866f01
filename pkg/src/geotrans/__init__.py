"""Permutation groups, graph symmetry checks and quasiprimitive type recognition."""

__version__ = "0.1.0"
