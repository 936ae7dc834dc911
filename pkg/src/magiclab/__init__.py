"""Closed distance magic labelings: constructions, spectral refuters, oracles."""

from .graph import Graph, GraphError
from .labeling import Verdict, regular_magic_constant, verify_cdm, weights
from .rectangles import MagicRectangle, NoRectangle, magic_rectangle
from .spectral import Spectrum, eigenvalues_symmetric, jacobi_eigenvalues

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "Verdict", "regular_magic_constant", "verify_cdm", "weights",
    "MagicRectangle", "NoRectangle", "magic_rectangle",
    "Spectrum", "eigenvalues_symmetric", "jacobi_eigenvalues",
]
