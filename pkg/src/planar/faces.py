"""Face tracing, corners, outer-face choices and vertex-face profiles."""

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Tuple

from .embedding import Dart, PlanarEmbedding

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Corner:
    """Incidence of a vertex with a face: the angle at ``vertex`` inside ``face``.

    ``position`` is the index of the vertex in the face's vertex cycle.
    """

    face: int
    position: int
    vertex: int


@dataclass(frozen=True)
class FaceSet:
    """All faces of an embedding.

    Face ``f`` is the vertex cycle ``faces[f]``; its darts are
    ``(faces[f][i], faces[f][i + 1])`` with the index taken cyclically.
    """

    embedding: PlanarEmbedding
    faces: Tuple[Tuple[int, ...], ...]
    dart_face: Dict[Dart, Tuple[int, int]]
    corner_index: Dict[Tuple[int, int], Tuple[int, ...]]
    incident_faces: Tuple[Tuple[int, ...], ...]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    @property
    def face_sizes(self) -> Tuple[int, ...]:
        return tuple(len(face) for face in self.faces)

    def face_darts(self, f: int) -> List[Dart]:
        face = self.faces[f]
        return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]

    def corners(self) -> List[Corner]:
        """Every corner, ordered by face then position."""
        return [
            Corner(face=f, position=i, vertex=v)
            for f, face in enumerate(self.faces)
            for i, v in enumerate(face)
        ]

    def corners_at(self, v: int) -> List[Corner]:
        """Corners around ``v`` in rotation order."""
        corners = []
        for u in self.embedding.rotation[v]:
            f, i = self.dart_face[(u, v)]
            corners.append(Corner(face=f, position=(i + 1) % len(self.faces[f]), vertex=v))
        return corners

    def face_vertices(self, f: int) -> FrozenSet[int]:
        return frozenset(self.faces[f])


@dataclass(frozen=True)
class OuterFaceChoice:
    """One face designated as the unbounded face."""

    outer_face: int
    boundary_vertices: FrozenSet[int]
    interior_vertices: FrozenSet[int]
    k: int


@dataclass(frozen=True)
class VertexFaceProfile:
    """Sizes of the faces around a vertex and the vertices sharing a face with it."""

    vertex: int
    fs: Tuple[int, ...]
    fn: FrozenSet[int]


def trace_faces(embedding: PlanarEmbedding) -> FaceSet:
    """Trace every face by following :meth:`PlanarEmbedding.next_dart`.

    Faces are discovered from vertices in ascending order and, per vertex,
    in rotation order, so face ids are deterministic.
    """
    dart_face: Dict[Dart, Tuple[int, int]] = {}
    faces: List[Tuple[int, ...]] = []

    for dart in embedding.darts():
        if dart in dart_face:
            continue
        f = len(faces)
        cycle = []
        current = dart
        while current not in dart_face:
            dart_face[current] = (f, len(cycle))
            cycle.append(current[0])
            current = embedding.next_dart(*current)
        faces.append(tuple(cycle))

    corner_index: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for f, face in enumerate(faces):
        for i, v in enumerate(face):
            corner_index[(v, f)].append(i)

    incident = tuple(
        tuple(dart_face[(u, v)][0] for u in embedding.rotation[v])
        for v in range(embedding.vertex_count)
    )

    face_set = FaceSet(
        embedding=embedding,
        faces=tuple(faces),
        dart_face=dart_face,
        corner_index={key: tuple(value) for key, value in corner_index.items()},
        incident_faces=incident,
    )
    logger.debug(
        f"traced {face_set.face_count} faces of {embedding.name or 'graph'}: "
        f"{sorted(Counter(face_set.face_sizes).items())}"
    )
    return face_set


def outer_face_choice(face_set: FaceSet, outer_face: int) -> OuterFaceChoice:
    """Designate ``outer_face`` as unbounded and split the vertex set accordingly."""
    if not 0 <= outer_face < face_set.face_count:
        raise ValueError(f"no face {outer_face}; graph has {face_set.face_count} faces")
    boundary = face_set.face_vertices(outer_face)
    everything = frozenset(range(face_set.embedding.vertex_count))
    return OuterFaceChoice(
        outer_face=outer_face,
        boundary_vertices=boundary,
        interior_vertices=everything - boundary,
        k=face_set.face_size(outer_face),
    )


def vertex_face_profiles(face_set: FaceSet) -> List[VertexFaceProfile]:
    """Compute fs(v) and fn(v) for every vertex; fn(v) never contains v."""
    profiles = []
    for v, around in enumerate(face_set.incident_faces):
        fs = tuple(sorted(face_set.face_size(f) for f in around))
        fn = frozenset(u for f in set(around) for u in face_set.faces[f]) - {v}
        profiles.append(VertexFaceProfile(vertex=v, fs=fs, fn=fn))
    return profiles
