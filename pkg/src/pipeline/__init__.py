"""Streaming filter, built-in fixtures and the lattice corpus generator."""

from .fixtures import (
    EXCLUDED_CORPUS,
    FIXTURE_NAMES,
    depicted_outer_face,
    emit_fixtures,
    fixture_drawing,
    load_fixture,
)
from .lattice import LatticeGraph, generate_lattice_corpus, lattice_block
from .runner import detect_format, iter_graph_records, run_filter

__all__ = [
    "EXCLUDED_CORPUS",
    "FIXTURE_NAMES",
    "depicted_outer_face",
    "emit_fixtures",
    "fixture_drawing",
    "load_fixture",
    "LatticeGraph",
    "generate_lattice_corpus",
    "lattice_block",
    "detect_format",
    "iter_graph_records",
    "run_filter",
]
