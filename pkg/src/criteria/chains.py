"""Straight triangle strips and the perimeter argument built on them.

A strip is a sequence of inner triangles glued edge to edge in which the
apexes of consecutive internal triangles differ, so in a matchstick drawing
it is a convex trapezoid or parallelogram of perimeter ``t + 2``. Any inner
region strictly containing it has a strictly longer perimeter, hence the
outer face needs ``k >= 2s + 2`` with ``s = ceil(t / 2)``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ..census import FaceCensus
from ..planar.faces import FaceSet, OuterFaceChoice
from .verdict import INAPPLICABLE, PASS, REJECT, TRIANGLE_CHAIN, CriterionVerdict

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class TriangleChain:
    """A maximal straight strip.

    ``rungs[i]`` is the edge shared by ``triangles[i]`` and
    ``triangles[i + 1]``; ``apexes[i]`` is the apex of ``triangles[i + 1]``.
    """

    triangles: Tuple[int, ...]
    apexes: Tuple[int, ...]
    rungs: Tuple[Edge, ...]

    @property
    def t(self) -> int:
        return len(self.triangles)

    @property
    def s(self) -> int:
        return (self.t + 1) // 2


class _StripWalker:
    def __init__(self, face_set: FaceSet, triangles: Set[int]):
        self.face_set = face_set
        self.triangles = triangles

    def across(self, f: int, u: int, v: int) -> Optional[int]:
        """The inner triangle on the other side of edge uv of triangle f, if any."""
        dart_face = self.face_set.dart_face
        dart = (u, v) if dart_face[(u, v)][0] == f else (v, u)
        g = dart_face[(dart[1], dart[0])][0]
        return g if g in self.triangles and g != f else None

    def third(self, f: int, x: int, y: int) -> int:
        return next(w for w in self.face_set.faces[f] if w != x and w != y)

    def walk(
        self,
        cur: int,
        x: int,
        y: int,
        visited: Set[int],
        apex: Dict[int, int],
        rungs: List[Edge],
        closing: Set[Edge],
    ) -> List[int]:
        """Extend past ``cur``, entered through rung xy; the next rung is forced to be yw."""
        seq = []
        while True:
            w = self.third(cur, x, y)
            nxt = self.across(cur, y, w)
            edge = (min(y, w), max(y, w))
            if nxt is None:
                break
            if nxt in visited:
                closing.add(edge)
                break
            visited.add(nxt)
            apex[cur] = y
            rungs.append(edge)
            seq.append(nxt)
            x, y, cur = y, w, nxt
        return seq


def find_triangle_chains(face_set: FaceSet, choice: OuterFaceChoice) -> List[TriangleChain]:
    """All maximal straight strips of inner triangles, longest first.

    Strips are grown from every rung (an edge between two inner triangles)
    in both orientations; a strip that closes into a ring is cut where the
    walk meets itself. Inner triangles without rungs form one-triangle chains.
    """
    triangles = {
        f
        for f in range(face_set.face_count)
        if face_set.face_size(f) == 3 and f != choice.outer_face
    }
    walker = _StripWalker(face_set, triangles)

    rung_sides: Dict[Edge, Tuple[int, int]] = {}
    for f in sorted(triangles):
        face = face_set.faces[f]
        for i, u in enumerate(face):
            v = face[(i + 1) % 3]
            g = walker.across(f, u, v)
            if g is not None:
                edge = (min(u, v), max(u, v))
                rung_sides[edge] = (min(f, g), max(f, g))

    chains: List[TriangleChain] = []
    seen: Set[FrozenSet[Edge]] = set()
    for edge in sorted(rung_sides):
        a, b = rung_sides[edge]
        for p, q in (edge, edge[::-1]):
            visited = {a, b}
            apex: Dict[int, int] = {}
            forward_rungs: List[Edge] = []
            backward_rungs: List[Edge] = []
            closing: Set[Edge] = set()
            forward = walker.walk(b, p, q, visited, apex, forward_rungs, closing)
            backward = walker.walk(a, q, p, visited, apex, backward_rungs, closing)

            key = frozenset([edge, *forward_rungs, *backward_rungs, *closing])
            if key in seen:
                continue
            seen.add(key)

            order = backward[::-1] + [a, b] + forward
            rungs = backward_rungs[::-1] + [edge] + forward_rungs
            chains.append(
                TriangleChain(
                    triangles=tuple(order),
                    apexes=tuple(apex[f] for f in order[1:-1]),
                    rungs=tuple(rungs),
                )
            )

    glued = {f for pair in rung_sides.values() for f in pair}
    for f in sorted(triangles - glued):
        chains.append(TriangleChain(triangles=(f,), apexes=(), rungs=()))

    chains.sort(key=lambda chain: (-chain.t, chain.triangles))
    logger.debug(
        f"{len(chains)} triangle chains for outer face {choice.outer_face}, "
        f"longest t={chains[0].t if chains else 0}"
    )
    return chains


def triangle_chain_criterion(
    chains: List[TriangleChain],
    census: FaceCensus,
    choice: OuterFaceChoice,
    two_connected: bool = True,
) -> CriterionVerdict:
    """Reject when a strip needs a longer outer face than ``k``.

    Triangulations pass (the area argument covers them). A strip that is
    every inner face is the whole inner region and proves nothing.
    """
    if census.is_triangulation:
        return CriterionVerdict(TRIANGLE_CHAIN, PASS, {"reason": "triangulation"})
    if not two_connected:
        return CriterionVerdict(TRIANGLE_CHAIN, INAPPLICABLE, {"reason": "not 2-connected"})

    for chain in chains:
        if chain.t == census.inner_face_count:
            continue
        if choice.k < 2 * chain.s + 2:
            witness = {
                "triangles": list(chain.triangles),
                "apexes": [v + 1 for v in chain.apexes],
                "rungs": [[u + 1, v + 1] for u, v in chain.rungs],
                "t": chain.t,
                "s": chain.s,
                "k": choice.k,
                "required_k": 2 * chain.s + 2,
            }
            return CriterionVerdict(TRIANGLE_CHAIN, REJECT, witness)

    longest = max((c.t for c in chains), default=0)
    return CriterionVerdict(TRIANGLE_CHAIN, PASS, {"chains": len(chains), "longest": longest})
