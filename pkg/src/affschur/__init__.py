"""Exact canonical-basis computations for affine quantum Schur algebras
and cyclic-quiver Hall algebras."""

__version__ = "0.1.0"
