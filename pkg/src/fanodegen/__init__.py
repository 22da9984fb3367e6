"""Exact computational tools for toric degenerations of low-degree Fano threefolds."""

__version__ = "0.1.0"
