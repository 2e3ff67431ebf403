"""Sweeping cost of simple polygonal domains.

Polygons are passed as sequences of ``(x, y)`` pairs; clockwise input is
accepted and reoriented. Library errors surface as ``SweepcostError``, a
subclass of ``ValueError``.
"""

from ._core import (
    SweepcostError,
    area,
    bisecting_chord,
    geodesic_distance,
    is_convex,
    perimeter,
    shortest_path,
    simulate,
    sweep_cost,
    width,
)

__all__ = [
    "SweepcostError",
    "area",
    "bisecting_chord",
    "geodesic_distance",
    "is_convex",
    "perimeter",
    "shortest_path",
    "simulate",
    "sweep_cost",
    "width",
]
