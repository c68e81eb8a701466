"""Exact solvers: rational simplex and independent-set branch and bound."""

from .independent_set import (
    BLPOutcome,
    ConflictBLP,
    build_conflict_blp,
    max_disjoint_configurations,
)
from .simplex import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    OPTIMAL,
    UNBOUNDED,
    LPOutcome,
    RationalLP,
    format_lp,
    simplex_solve,
    verify,
)

__all__ = [
    "BLPOutcome",
    "ConflictBLP",
    "build_conflict_blp",
    "max_disjoint_configurations",
    "EQ",
    "GE",
    "LE",
    "INFEASIBLE",
    "OPTIMAL",
    "UNBOUNDED",
    "LPOutcome",
    "RationalLP",
    "format_lp",
    "simplex_solve",
    "verify",
]
