"""Angle arguments, with every angle measured in units of pi.

Each corner (vertex-face incidence) carries an angle ``x_a``. In a matchstick
drawing inner triangle corners are 1/3, neighbouring corners of an inner
quadrangle sum to 1, neighbouring corners of an inner s-gon (s >= 5) sum to
more than a bound, every angle is positive, and the corners ``o(f)`` just
outside a face sum to ``|f| + 2`` (inner face) or ``k - 2`` (outer face).
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..optimize import GE, EQ, INFEASIBLE, OPTIMAL, RationalLP, format_lp, simplex_solve
from ..optimize.simplex import format_rational
from ..planar.embedding import connectivity
from ..planar.faces import Corner, FaceSet, OuterFaceChoice
from .verdict import ANGLE_LP, INAPPLICABLE, LOCAL_ANGLE, PASS, REJECT, CriterionVerdict

logger = logging.getLogger(__name__)

LEMMA = "lemma"
PAPER = "paper"
BOUND_MODES = (LEMMA, PAPER)

# Lower bound on two neighbouring corners of an inner s-gon, s >= 5.
PAIR_BOUNDS = {LEMMA: Fraction(1, 2), PAPER: Fraction(1)}

TRIANGLE_ANGLE = Fraction(1, 3)


@dataclass(frozen=True)
class AngleSystem:
    """Corners of an embedding with one outer face chosen.

    ``corners[c]`` is corner ``c``; ``corner_id`` maps ``(face, position)``
    to it. ``outer_corners[f]`` lists o(f) and ``adjacent_pairs[f]`` the
    neighbouring corner pairs of face ``f``.
    """

    face_set: FaceSet
    choice: OuterFaceChoice
    corners: Tuple[Corner, ...]
    corner_id: Dict[Tuple[int, int], int]
    outer_corners: Tuple[Tuple[int, ...], ...]
    adjacent_pairs: Tuple[Tuple[Tuple[int, int], ...], ...]
    two_connected: bool

    def is_inner(self, f: int) -> bool:
        return f != self.choice.outer_face

    def target(self, f: int) -> int:
        size = self.face_set.face_size(f)
        return size + 2 if self.is_inner(f) else size - 2


def build_angle_system(
    face_set: FaceSet, choice: OuterFaceChoice, two_connected: Optional[bool] = None
) -> AngleSystem:
    """Index corners, o(f) and neighbouring pairs for every face.

    ``two_connected`` may be passed when already known; criteria report
    inapplicable on systems that are not 2-connected.
    """
    if two_connected is None:
        two_connected = connectivity(face_set.embedding, 2)

    corners = tuple(face_set.corners())
    corner_id = {(c.face, c.position): i for i, c in enumerate(corners)}

    outer_corners = []
    pairs = []
    for f, face in enumerate(face_set.faces):
        members = []
        for v in dict.fromkeys(face):
            members.extend(
                corner_id[(c.face, c.position)] for c in face_set.corners_at(v) if c.face != f
            )
        outer_corners.append(tuple(members))
        size = len(face)
        pairs.append(
            tuple((corner_id[(f, i)], corner_id[(f, (i + 1) % size)]) for i in range(size))
        )

    return AngleSystem(
        face_set=face_set,
        choice=choice,
        corners=corners,
        corner_id=corner_id,
        outer_corners=tuple(outer_corners),
        adjacent_pairs=tuple(pairs),
        two_connected=two_connected,
    )


def _face_sum(system: AngleSystem, f: int) -> Tuple[Fraction, List[int], List[int]]:
    """Known part of the o(f) sum, the unknown corners, and which unknowns are lone quad corners."""
    face_set = system.face_set
    members = set(system.outer_corners[f])
    known = Fraction(0)
    unknown: List[int] = []
    lone_quad: List[int] = []

    by_face: Dict[int, List[int]] = {}
    for c in system.outer_corners[f]:
        by_face.setdefault(system.corners[c].face, []).append(c)

    for g, cs in by_face.items():
        size = face_set.face_size(g)
        if not system.is_inner(g) or size > 4:
            unknown.extend(cs)
        elif size == 3:
            known += TRIANGLE_ANGLE * len(cs)
        else:
            paired = set()
            for a, b in system.adjacent_pairs[g]:
                if a in members and b in members and a not in paired and b not in paired:
                    paired.update((a, b))
                    known += 1
            for c in cs:
                if c not in paired:
                    unknown.append(c)
                    lone_quad.append(c)
    return known, unknown, lone_quad


def local_angle_criterion(system: AngleSystem) -> CriterionVerdict:
    """Look for a face whose o(f) sum is contradicted by the forced angles alone.

    With every corner of o(f) known, the sum must hit the target. With one
    unknown corner its angle is forced and must be positive; a lone
    quadrangle corner must also stay below 1, or its neighbour would not be
    positive. Faces with more unknowns give no verdict.
    """
    if not system.two_connected:
        return CriterionVerdict(LOCAL_ANGLE, INAPPLICABLE, {"reason": "not 2-connected"})

    for f in range(system.face_set.face_count):
        known, unknown, lone_quad = _face_sum(system, f)
        target = system.target(f)
        witness = {
            "face": f,
            "face_vertices": [v + 1 for v in system.face_set.faces[f]],
            "outer": not system.is_inner(f),
            "target": format_rational(Fraction(target)),
            "known_sum": format_rational(known),
            "unknown_corners": len(unknown),
        }
        if not unknown and known != target:
            logger.debug(f"face {f}: o(f) sums to {known}, needs {target}")
            return CriterionVerdict(LOCAL_ANGLE, REJECT, witness)
        if len(unknown) == 1:
            forced = target - known
            if forced <= 0 or (lone_quad and forced >= 1):
                corner = system.corners[unknown[0]]
                witness["forced_angle"] = format_rational(forced)
                witness["forced_corner"] = {"vertex": corner.vertex + 1, "face": corner.face}
                logger.debug(f"face {f}: corner at {corner.vertex + 1} forced to {forced}")
                return CriterionVerdict(LOCAL_ANGLE, REJECT, witness)

    return CriterionVerdict(LOCAL_ANGLE, PASS, {})


def build_angle_lp(system: AngleSystem, bound_mode: str = LEMMA) -> RationalLP:
    """The angle LP: maximize the smallest angle ``y`` subject to the angle facts."""
    if bound_mode not in BOUND_MODES:
        raise ValueError(f"bound mode must be one of {BOUND_MODES}, got {bound_mode!r}")
    face_set = system.face_set
    lp = RationalLP(f"{face_set.embedding.name or 'graph'} outer={system.choice.outer_face}")

    x: List[int] = []
    for c in system.corners:
        inner_triangle = system.is_inner(c.face) and face_set.face_size(c.face) == 3
        bound = TRIANGLE_ANGLE if inner_triangle else None
        name = f"x{c.face}_{c.position}_v{c.vertex + 1}"
        x.append(lp.add_variable(name, lower=bound, upper=bound))
    y = lp.add_variable("y", lower=None)

    for i, c in enumerate(system.corners):
        lp.add_constraint({x[i]: 1, y: -1}, GE, 0, name=f"positive_{c.face}_{c.position}")

    pair_bound = PAIR_BOUNDS[bound_mode]
    for f in range(face_set.face_count):
        size = face_set.face_size(f)
        if not system.is_inner(f) or size == 3:
            continue
        for a, b in system.adjacent_pairs[f]:
            pos = system.corners[a].position
            if size == 4:
                lp.add_constraint({x[a]: 1, x[b]: 1}, EQ, 1, name=f"quad_{f}_{pos}")
            else:
                lp.add_constraint(
                    {x[a]: 1, x[b]: 1, y: -1}, GE, pair_bound, name=f"pair_{f}_{pos}"
                )

    for f in range(face_set.face_count):
        lp.add_constraint(
            {x[c]: 1 for c in system.outer_corners[f]}, EQ, system.target(f), name=f"around_{f}"
        )

    lp.maximize({y: 1})
    return lp


def angle_lp_criterion(
    system: AngleSystem, bound_mode: str = LEMMA, dump_path: Optional[str] = None
) -> CriterionVerdict:
    """Reject when no drawing has all angles positive: LP infeasible or optimum ``y <= 0``.

    An unbounded LP passes. The certificate in the witness lists the
    non-zero row multipliers, already verified by the solver.
    """
    if not system.two_connected:
        return CriterionVerdict(ANGLE_LP, INAPPLICABLE, {"reason": "not 2-connected"})

    lp = build_angle_lp(system, bound_mode)
    if dump_path:
        _dump(lp, dump_path)
    outcome = simplex_solve(lp)

    witness: Dict[str, object] = {
        "status": outcome.status,
        "bound_mode": bound_mode,
        "rows": len(lp.constraints),
        "pivots": outcome.pivots,
    }
    if outcome.status == OPTIMAL:
        assert outcome.objective_value is not None
        witness["y"] = format_rational(outcome.objective_value)

    rejects = outcome.status == INFEASIBLE or (
        outcome.status == OPTIMAL
        and outcome.objective_value is not None
        and outcome.objective_value <= 0
    )
    if rejects and outcome.duals is not None:
        witness["certificate"] = {
            con.name: format_rational(lam)
            for lam, con in zip(outcome.duals, lp.constraints)
            if lam
        }
        witness["verified"] = True
    logger.debug(
        f"angle LP ({bound_mode}) for outer face {system.choice.outer_face}: {outcome.status}"
    )
    return CriterionVerdict(ANGLE_LP, REJECT if rejects else PASS, witness)


def _dump(lp: RationalLP, path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_lp(lp))
    logger.debug(f"wrote {path}")
