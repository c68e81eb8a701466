"""Straight-line drawings: coordinates plus edges, turned into embeddings."""

from dataclasses import dataclass
from typing import Sequence, Tuple

from .embedding import PlanarEmbedding
from .faces import FaceSet

Point = Tuple[float, float]


@dataclass(frozen=True)
class Drawing:
    name: str
    coords: Tuple[Point, ...]
    edges: Tuple[Tuple[int, int], ...]

    def embedding(self) -> PlanarEmbedding:
        return PlanarEmbedding.from_drawing(self.coords, self.edges, name=self.name)


def signed_area(coords: Sequence[Point], cycle: Sequence[int]) -> float:
    """Shoelace area of a vertex cycle; positive when counter-clockwise."""
    total = 0.0
    for i, v in enumerate(cycle):
        x0, y0 = coords[v]
        x1, y1 = coords[cycle[(i + 1) % len(cycle)]]
        total += x0 * y1 - x1 * y0
    return total / 2


def drawn_outer_face(face_set: FaceSet, coords: Sequence[Point]) -> int:
    """The face that is unbounded in the drawing.

    Bounded faces are traced counter-clockwise, so the unbounded one is the
    only face with negative signed area.
    """
    return min(range(face_set.face_count), key=lambda f: signed_area(coords, face_set.faces[f]))
