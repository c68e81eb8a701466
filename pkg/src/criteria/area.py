"""Area argument: guaranteed inner area against the largest equilateral k-gon."""

import logging

from ..census import FaceCensus
from ..geometry import exceeds_capacity, max_area_units, min_area_units
from ..optimize import BLPOutcome
from ..planar.faces import OuterFaceChoice
from .verdict import AREA, INAPPLICABLE, PASS, REJECT, CriterionVerdict

logger = logging.getLogger(__name__)

# Two quadrangles around a configuration center cover more than two triangle units.
CONFIGURATION_UNITS = 2


def area_lower_bound(census: FaceCensus, blp: BLPOutcome) -> float:
    """Inner area guaranteed in triangle units: per-face minimum plus the configurations."""
    per_face = sum(count * min_area_units(s, is_inner=True).value for s, count in census.inner_A.items())
    return per_face + CONFIGURATION_UNITS * blp.optimum


def area_criterion(
    census: FaceCensus, choice: OuterFaceChoice, blp: BLPOutcome
) -> CriterionVerdict:
    """Reject when the guaranteed inner area exceeds what a unit-sided k-gon can enclose."""
    if choice.k < 3:
        # a single edge bounds no polygon
        return CriterionVerdict(
            AREA, INAPPLICABLE, {"reason": "outer face is not a polygon", "k": choice.k}
        )
    lower = area_lower_bound(census, blp)
    capacity = max_area_units(choice.k).value
    witness = {
        "lower_bound": lower,
        "capacity": capacity,
        "k": choice.k,
        "inner_triangles": census.inner_A.get(3, 0),
        "inner_odd_faces": sum(c for s, c in census.inner_A.items() if s >= 5 and s % 2),
        "configurations": [v + 1 for v in blp.chosen_set],
    }
    outcome = REJECT if exceeds_capacity(lower, capacity) else PASS
    logger.debug(f"area bound {lower:.4f} vs capacity {capacity:.4f} (k={choice.k}): {outcome}")
    return CriterionVerdict(AREA, outcome, witness)
