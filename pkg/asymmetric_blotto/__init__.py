"""Exact analysis of the asymmetric Colonel Blotto game."""

__version__ = "0.1.0"
