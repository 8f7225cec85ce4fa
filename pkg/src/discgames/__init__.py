"""Exact solvers for turn-based discounted-sum games and integer-polynomial root bounds."""
__version__ = "0.1.0"
