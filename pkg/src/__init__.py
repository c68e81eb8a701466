"""
Matchstick - exclusion filter for matchstick graphs

Decides, for embedded planar graphs, whether some combinatorial or metric
argument proves they cannot be drawn with unit-length straight edges and
no crossings.
"""

__version__ = "1.0.0"
__author__ = "Matchstick Team"
__description__ = "Exclusion criteria for matchstick graphs"

# Core configuration
from .config import Config
from .observability import setup_logging

# Embedded graphs
from .planar import PlanarEmbedding, trace_faces

# Criteria
from .criteria import EvaluationOptions, evaluate_graph

# Pipeline
from .pipeline import generate_lattice_corpus, load_fixture, run_filter

# Reports
from .report import GraphReport, RunStats

__all__ = [
    # Config
    "Config",
    "setup_logging",
    # Graphs
    "PlanarEmbedding",
    "trace_faces",
    # Criteria
    "EvaluationOptions",
    "evaluate_graph",
    # Pipeline
    "generate_lattice_corpus",
    "load_fixture",
    "run_filter",
    # Reports
    "GraphReport",
    "RunStats",
]
