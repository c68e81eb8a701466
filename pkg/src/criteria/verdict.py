"""Verdict returned by every criterion."""

from dataclasses import dataclass, field
from typing import Any, Dict

AREA = "area"
TRIANGLE_CHAIN = "triangle_chain"
LOCAL_ANGLE = "local_angle"
ANGLE_LP = "angle_lp"

# Evaluation order, cheapest first.
CRITERIA = (AREA, TRIANGLE_CHAIN, LOCAL_ANGLE, ANGLE_LP)

# Short names accepted on the command line and in MATCHSTICK_CRITERIA.
CRITERION_ALIASES = {
    "area": AREA,
    "chain": TRIANGLE_CHAIN,
    "local": LOCAL_ANGLE,
    "lp": ANGLE_LP,
}

REJECT = "reject"
PASS = "pass"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of one criterion for one outer-face choice.

    Witness values are plain JSON types; vertex ids in them are 1-based.
    """

    criterion: str
    outcome: str
    witness: Dict[str, Any] = field(default_factory=dict)

    @property
    def rejects(self) -> bool:
        return self.outcome == REJECT
