"""Exact chromatic polynomials, bounding inequalities and small-order verification of coloring bounds."""

from __future__ import annotations

from .chroma import chromatic_polynomial, count_colorings
from .errors import ChromToolsError
from .graph import Graph, canonical_form, from_graph6, to_graph6
from .poly import Poly, X

__all__ = [
    "ChromToolsError", "Graph", "Poly", "X", "canonical_form", "chromatic_polynomial",
    "count_colorings", "from_graph6", "to_graph6",
]
__version__ = "0.1.0"
