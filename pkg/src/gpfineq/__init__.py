"""Generalized proportional fractional integrals and inequality verification."""

__version__ = "0.1.0"
