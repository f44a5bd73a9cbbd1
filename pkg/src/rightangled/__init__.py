"""Combinatorics and exact vertex bounds for right-angled hyperbolic polytopes."""

from .polytope import FINITE, IDEAL, CombinatorialPolytope, StructureError, Vertex

__all__ = ["FINITE", "IDEAL", "CombinatorialPolytope", "StructureError", "Vertex"]
__version__ = "0.1.0"
