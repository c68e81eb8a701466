"""Embedded planar graphs: rotation systems, faces and the two file formats."""

from .drawing import Drawing, drawn_outer_face, signed_area
from .embedding import (
    Dart,
    PlanarEmbedding,
    connectivity,
    connectivity_level,
    regularity,
)
from .faces import (
    Corner,
    FaceSet,
    OuterFaceChoice,
    VertexFaceProfile,
    outer_face_choice,
    trace_faces,
    vertex_face_profiles,
)
from .planar_code import (
    GraphRecord,
    iter_planar_code_records,
    parse_planar_code,
    serialize_planar_code,
)
from .rotation_text import format_rotation_text, iter_rotation_text_records, parse_rotation_text

__all__ = [
    "Drawing",
    "drawn_outer_face",
    "signed_area",
    "Dart",
    "PlanarEmbedding",
    "connectivity",
    "connectivity_level",
    "regularity",
    "Corner",
    "FaceSet",
    "OuterFaceChoice",
    "VertexFaceProfile",
    "outer_face_choice",
    "trace_faces",
    "vertex_face_profiles",
    "GraphRecord",
    "iter_planar_code_records",
    "parse_planar_code",
    "serialize_planar_code",
    "format_rotation_text",
    "iter_rotation_text_records",
    "parse_rotation_text",
]
