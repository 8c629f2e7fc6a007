"""Finite commutative rings, their annihilator graphs, and exact planarity and genus."""

from .ag import EdgeCriteria, annihilator_graph, edge_criteria, vertices, zero_divisor_graph
from .classify import Prediction, enumerate_family, predict_classification
from .graph import Graph, graph_stats, recognize_shape
from .parse import elaborate, format_expr, parse_ring_expr, ring_from_text
from .presentation import make_gf, make_quotient
from .rings import (
    Ring,
    annihilator,
    axiom_check,
    element_classes,
    local_decomposition,
    make_product,
    make_zn,
    primitive_idempotents,
    structure_predicates,
)
from .topology import (
    Budget,
    closed_form_genus,
    find_subdivision,
    genus_lower_bound,
    is_planar,
    min_genus,
    trace_faces,
)
from .verify import CorpusEntry, builtin_corpus, emit_report, export_graph, run_corpus

__all__ = [
    "Budget",
    "CorpusEntry",
    "EdgeCriteria",
    "Graph",
    "Prediction",
    "Ring",
    "annihilator",
    "annihilator_graph",
    "axiom_check",
    "builtin_corpus",
    "closed_form_genus",
    "edge_criteria",
    "elaborate",
    "element_classes",
    "emit_report",
    "enumerate_family",
    "export_graph",
    "find_subdivision",
    "format_expr",
    "genus_lower_bound",
    "graph_stats",
    "is_planar",
    "local_decomposition",
    "make_gf",
    "make_product",
    "make_quotient",
    "make_zn",
    "min_genus",
    "parse_ring_expr",
    "predict_classification",
    "primitive_idempotents",
    "recognize_shape",
    "ring_from_text",
    "run_corpus",
    "structure_predicates",
    "trace_faces",
    "vertices",
    "zero_divisor_graph",
]
