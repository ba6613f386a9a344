"""Exact construction and certification of commuting polynomial families on Lie-Poisson duals."""

__version__ = "0.1.0"
