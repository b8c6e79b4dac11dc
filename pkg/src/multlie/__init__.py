"""Exact computations with finite multiplicative Lie algebras."""

__version__ = "0.1.0"
