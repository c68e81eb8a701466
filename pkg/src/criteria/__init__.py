"""Rejection criteria for matchstick embeddings and the per-graph evaluator."""

from .angles import (
    LEMMA,
    PAPER,
    AngleSystem,
    angle_lp_criterion,
    build_angle_lp,
    build_angle_system,
    local_angle_criterion,
)
from .area import area_criterion, area_lower_bound
from .chains import TriangleChain, find_triangle_chains, triangle_chain_criterion
from .evaluate import EvaluationOptions, evaluate_graph, verdict_for
from .verdict import (
    ANGLE_LP,
    AREA,
    CRITERIA,
    CRITERION_ALIASES,
    LOCAL_ANGLE,
    TRIANGLE_CHAIN,
    CriterionVerdict,
)

__all__ = [
    "LEMMA",
    "PAPER",
    "AngleSystem",
    "angle_lp_criterion",
    "build_angle_lp",
    "build_angle_system",
    "local_angle_criterion",
    "area_criterion",
    "area_lower_bound",
    "TriangleChain",
    "find_triangle_chains",
    "triangle_chain_criterion",
    "EvaluationOptions",
    "evaluate_graph",
    "verdict_for",
    "ANGLE_LP",
    "AREA",
    "CRITERIA",
    "CRITERION_ALIASES",
    "LOCAL_ANGLE",
    "TRIANGLE_CHAIN",
    "CriterionVerdict",
]
