"""Exact-arithmetic verification of jacobian Kummer surface divisor combinatorics."""

__version__ = "0.1.0"
