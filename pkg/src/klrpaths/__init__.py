"""Exact combinatorics, alcove-path calculus and light-leaves bases for
cyclotomic quiver Hecke algebras."""

from .params import AlgebraParams

__all__ = ["AlgebraParams"]
__version__ = "0.1.0"
