"""Planarity, exact orientable genus and subdivision search."""

from .embedding import EmbeddingResult, RotationSystem, face_walks, trace_faces, validate_rotation
from .genus import Budget, GenusResult, closed_form_genus, genus_lower_bound, min_genus, search_whole
from .planarity import (
    Certificate,
    PlanarEmbedding,
    SubdivisionWitness,
    find_subdivision,
    is_planar,
    target_edges,
    validate_planar,
    validate_witness,
)

__all__ = [
    "Budget",
    "Certificate",
    "EmbeddingResult",
    "GenusResult",
    "PlanarEmbedding",
    "RotationSystem",
    "SubdivisionWitness",
    "closed_form_genus",
    "face_walks",
    "find_subdivision",
    "genus_lower_bound",
    "is_planar",
    "min_genus",
    "search_whole",
    "target_edges",
    "trace_faces",
    "validate_planar",
    "validate_rotation",
    "validate_witness",
]
