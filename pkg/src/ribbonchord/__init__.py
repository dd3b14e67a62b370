"""Framed chord diagrams, their ribbon graphs, partial duals and the
partial-dual polynomial."""

__version__ = "0.1.0"

from .diagram import (ChordEnd, Diagram, DiagramError, canonical_diagram, canonical_form,
                      equivalent, flip_circle, mirror, parse, serialize, slide)
from .pdpoly import CapExceeded, Polynomial, partial_dual_polynomial
from .pdual import DualResult, full_dual, partial_dual
from .surface import (SurfaceStats, boundary_components, corner_structure, euler_genus,
                      is_orientable, surface_stats)

__all__ = [
    "CapExceeded", "ChordEnd", "Diagram", "DiagramError", "DualResult", "Polynomial",
    "SurfaceStats", "boundary_components", "canonical_diagram", "canonical_form",
    "corner_structure", "equivalent", "euler_genus", "flip_circle", "full_dual",
    "is_orientable", "mirror", "parse", "partial_dual", "partial_dual_polynomial",
    "serialize", "slide", "surface_stats",
]
