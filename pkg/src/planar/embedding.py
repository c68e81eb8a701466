"""Combinatorial planar embeddings given as rotation systems."""

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import EmbeddingError

logger = logging.getLogger(__name__)

Dart = Tuple[int, int]


@dataclass(frozen=True)
class PlanarEmbedding:
    """A simple connected plane graph stored as clockwise neighbour rotations.

    Vertices are ``0 .. vertex_count - 1``. Construction validates symmetry,
    simplicity, connectivity and the genus (V - E + F = 2), so every instance
    in circulation is a valid plane embedding.
    """

    rotation: Tuple[Tuple[int, ...], ...]
    name: Optional[str] = None
    _position: Tuple[Dict[int, int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        rotation = tuple(tuple(int(u) for u in nbrs) for nbrs in self.rotation)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "_position", _check_simple(rotation))
        _check_connected(rotation)
        faces = _count_faces(rotation, self._position)
        euler = self.vertex_count - self.edge_count + faces
        if euler != 2:
            raise EmbeddingError(
                f"rotation system is not planar: V - E + F = {euler} "
                f"(V={self.vertex_count}, E={self.edge_count}, F={faces})"
            )

    @classmethod
    def from_rotation(
        cls, rotation: Sequence[Sequence[int]], name: Optional[str] = None
    ) -> "PlanarEmbedding":
        """Build an embedding from zero-based clockwise rotations."""
        return cls(rotation=tuple(tuple(nbrs) for nbrs in rotation), name=name)

    @classmethod
    def from_drawing(
        cls,
        coords: Sequence[Tuple[float, float]],
        edges: Iterable[Tuple[int, int]],
        name: Optional[str] = None,
    ) -> "PlanarEmbedding":
        """Build an embedding from a straight-line plane drawing.

        Neighbours are ordered clockwise around each vertex by the direction
        of the incident segment. The drawing must be crossing-free; the
        genus check rejects most drawings that are not.

        Args:
            coords: Position of every vertex.
            edges: Zero-based vertex pairs.
            name: Optional graph name kept for reporting.
        """
        adjacency: List[List[int]] = [[] for _ in coords]
        for u, v in edges:
            adjacency[u].append(v)
            adjacency[v].append(u)

        rotation = []
        for v, nbrs in enumerate(adjacency):
            x0, y0 = coords[v]
            rotation.append(
                tuple(
                    sorted(
                        nbrs,
                        key=lambda u: -math.atan2(coords[u][1] - y0, coords[u][0] - x0),
                    )
                )
            )
        return cls(rotation=tuple(rotation), name=name)

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def edges(self) -> List[Tuple[int, int]]:
        """Undirected edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u, nbrs in enumerate(self.rotation) for v in nbrs if u < v)

    def darts(self) -> List[Dart]:
        """All directed edges, ordered by tail vertex and rotation."""
        return [(u, v) for u, nbrs in enumerate(self.rotation) for v in nbrs]

    def next_dart(self, u: int, v: int) -> Dart:
        """Successor of dart (u, v) on its face.

        The next dart leaves v towards the neighbour that follows u in the
        rotation of v.
        """
        nbrs = self.rotation[v]
        return v, nbrs[(self._position[v][u] + 1) % len(nbrs)]

    def relabel(self, permutation: Sequence[int]) -> "PlanarEmbedding":
        """Return the same embedding with vertex ``v`` renamed ``permutation[v]``."""
        rotation: List[Tuple[int, ...]] = [()] * self.vertex_count
        for v, nbrs in enumerate(self.rotation):
            rotation[permutation[v]] = tuple(permutation[u] for u in nbrs)
        return PlanarEmbedding(rotation=tuple(rotation), name=self.name)

    def to_networkx(self) -> nx.Graph:
        """Underlying abstract graph as a networkx graph."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph


def _check_simple(rotation: Tuple[Tuple[int, ...], ...]) -> Tuple[Dict[int, int], ...]:
    n = len(rotation)
    if n == 0:
        raise EmbeddingError("graph has no vertices")

    position = []
    for v, nbrs in enumerate(rotation):
        index: Dict[int, int] = {}
        for i, u in enumerate(nbrs):
            if not 0 <= u < n:
                raise EmbeddingError(f"vertex {v + 1}: neighbour {u + 1} out of range 1..{n}")
            if u == v:
                raise EmbeddingError(f"vertex {v + 1}: loop")
            if u in index:
                raise EmbeddingError(f"vertex {v + 1}: parallel edge to {u + 1}")
            index[u] = i
        position.append(index)

    for v, nbrs in enumerate(rotation):
        for u in nbrs:
            if v not in position[u]:
                raise EmbeddingError(
                    f"asymmetric adjacency: {u + 1} listed by {v + 1} but not vice versa"
                )

    if not any(rotation):
        raise EmbeddingError("graph has no edges")
    return tuple(position)


def _check_connected(rotation: Tuple[Tuple[int, ...], ...]) -> None:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in rotation[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != len(rotation):
        missing = min(set(range(len(rotation))) - seen)
        raise EmbeddingError(f"graph is disconnected: vertex {missing + 1} unreachable from 1")


def _count_faces(
    rotation: Tuple[Tuple[int, ...], ...], position: Tuple[Dict[int, int], ...]
) -> int:
    visited = set()
    faces = 0
    for u, nbrs in enumerate(rotation):
        for v in nbrs:
            if (u, v) in visited:
                continue
            faces += 1
            dart = (u, v)
            while dart not in visited:
                visited.add(dart)
                a, b = dart
                around = rotation[b]
                dart = (b, around[(position[b][a] + 1) % len(around)])
    return faces


def connectivity(embedding: PlanarEmbedding, level: int) -> bool:
    """Whether the graph stays connected after deleting any ``level - 1`` vertices.

    Complete graphs ``K_m`` count as ``(m - 1)``-connected, so a graph needs
    more than ``level`` vertices to be ``level``-connected.
    """
    if level not in (1, 2, 3):
        raise ValueError(f"connectivity level must be 1, 2 or 3, got {level}")
    return connectivity_level(embedding) >= level


def connectivity_level(embedding: PlanarEmbedding) -> int:
    """Largest level in 1..3 for which :func:`connectivity` holds.

    Biconnectivity is one DFS; a biconnected graph is 3-connected when no
    single vertex deletion leaves a cut vertex.
    """
    n = embedding.vertex_count
    min_degree = min(len(nbrs) for nbrs in embedding.rotation)
    if n <= 2 or min_degree < 2:
        return 1
    graph = embedding.to_networkx()
    if not nx.is_biconnected(graph):
        return 1
    if n <= 3 or min_degree < 3:
        return 2
    for v in graph:
        if not nx.is_biconnected(nx.restricted_view(graph, [v], [])):
            return 2
    return 3


def regularity(embedding: PlanarEmbedding) -> Optional[int]:
    """Common degree of all vertices, or ``None`` when degrees differ."""
    degrees = {len(nbrs) for nbrs in embedding.rotation}
    return degrees.pop() if len(degrees) == 1 else None
