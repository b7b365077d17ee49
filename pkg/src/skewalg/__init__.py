"""Exact computations with skew group algebras of bound quiver algebras."""

__version__ = "0.1.0"
