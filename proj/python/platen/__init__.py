"""Equilateral bipyramids, laid flat and serialized for 3D printing."""

from platen._core import (
    Mesh,
    PlatenError,
    Winding,
    apex_height,
    bipyramid,
    euler_characteristic,
    from_stl,
    is_closed,
    lay_flat,
    octahedron,
    on_build_plate,
    scale,
    signed_volume,
    to_openscad,
    to_stl,
)

__all__ = [
    "Mesh",
    "PlatenError",
    "Winding",
    "apex_height",
    "bipyramid",
    "euler_characteristic",
    "from_stl",
    "is_closed",
    "lay_flat",
    "octahedron",
    "on_build_plate",
    "scale",
    "signed_volume",
    "to_openscad",
    "to_stl",
]
