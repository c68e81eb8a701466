"""Area bounds for equilateral polygons and detection of configuration centers.

Areas are measured in units of the unit equilateral triangle (sqrt(3)/4).
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .planar.faces import FaceSet, OuterFaceChoice, VertexFaceProfile

logger = logging.getLogger(__name__)

MAX_BOUND = "max-bound"
MIN_BOUND = "min-bound"

# Face-size patterns around a vertex that force two quadrangles of total
# area above sqrt(3)/2.
CENTER_PROFILES = ((3, 3, 4, 4), (3, 4, 4, 4))

# Relative slack before an area lower bound counts as exceeding a capacity.
AREA_MARGIN = 1e-9


@dataclass(frozen=True)
class AreaUnits:
    value: float
    provenance: str


@dataclass(frozen=True)
class ConfigurationCenter:
    """An inner vertex whose four inner faces match one of the center profiles."""

    vertex: int
    profile: Tuple[int, ...]
    quad_faces: Tuple[int, ...]


def max_area_units(k: int) -> AreaUnits:
    """Largest area of an equilateral k-gon with unit sides, in triangle units.

    The regular k-gon is extremal: ``k/4 * cot(pi/k)`` divided by ``sqrt(3)/4``.

    Raises:
        ValueError: If k < 3.
    """
    if k < 3:
        raise ValueError(f"polygon needs at least 3 sides, got {k}")
    return AreaUnits(k / math.tan(math.pi / k) / math.sqrt(3), MAX_BOUND)


def min_area_units(s: int, is_inner: bool = True) -> AreaUnits:
    """Area an s-gonal face of a matchstick graph is guaranteed, in triangle units.

    Triangles are exactly one unit and odd polygons at least one. Even
    polygons can be flattened into rhombus chains of arbitrarily small area,
    so they are guaranteed nothing. The outer face encloses no area of its
    own and is guaranteed nothing either.

    Raises:
        ValueError: If s < 3.
    """
    if s < 3:
        raise ValueError(f"polygon needs at least 3 sides, got {s}")
    if not is_inner:
        return AreaUnits(0.0, MIN_BOUND)
    return AreaUnits(1.0 if s % 2 else 0.0, MIN_BOUND)


def exceeds_capacity(lower_bound: float, capacity: float) -> bool:
    return lower_bound > capacity * (1 + AREA_MARGIN)


def find_configuration_centers(
    face_set: FaceSet,
    profiles: Sequence[VertexFaceProfile],
    choice: OuterFaceChoice,
) -> List[ConfigurationCenter]:
    """Interior vertices with face sizes {3,3,4,4} or {3,4,4,4}, all faces inner."""
    centers = []
    for v in sorted(choice.interior_vertices):
        profile = profiles[v]
        if profile.fs not in CENTER_PROFILES:
            continue
        around = face_set.incident_faces[v]
        if choice.outer_face in around or len(set(around)) != len(around):
            continue
        quads = tuple(sorted(f for f in around if face_set.face_size(f) == 4))
        centers.append(ConfigurationCenter(vertex=v, profile=profile.fs, quad_faces=quads))

    logger.debug(f"{len(centers)} configuration centers for outer face {choice.outer_face}")
    return centers
