"""Random matchstick graphs drawn on the unit square and triangular lattices.

A graph is the union of the boundaries of a set of lattice cells, so every
edge has unit length and no two edges cross.
"""

import logging
import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Set, Tuple

from ..planar.drawing import Drawing, Point, drawn_outer_face
from ..planar.embedding import PlanarEmbedding, connectivity
from ..planar.faces import trace_faces

logger = logging.getLogger(__name__)

SQUARE = "square"
TRIANGULAR = "triangular"
LATTICE_KINDS = (SQUARE, TRIANGULAR)

MIN_VERTICES = 5
MAX_VERTICES = 80

# Square cells are (x, y); triangular cells are (a, b, 0) pointing up or
# (a, b, 1) pointing down, in skew lattice coordinates.
Cell = Tuple[int, ...]
LatticePoint = Tuple[int, int]


def to_cartesian(kind: str, point: LatticePoint) -> Point:
    a, b = point
    if kind == SQUARE:
        return (float(a), float(b))
    return (a + b * 0.5, b * math.sqrt(3) / 2)


def cell_corners(kind: str, cell: Cell) -> List[LatticePoint]:
    """Corners of a cell in cyclic order."""
    if kind == SQUARE:
        x, y = cell
        return [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
    a, b, down = cell
    if down:
        return [(a + 1, b), (a + 1, b + 1), (a, b + 1)]
    return [(a, b), (a + 1, b), (a, b + 1)]


def cell_neighbours(kind: str, cell: Cell) -> List[Cell]:
    """Cells sharing an edge with ``cell``."""
    if kind == SQUARE:
        x, y = cell
        return [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]
    a, b, down = cell
    if down:
        return [(a, b, 0), (a + 1, b, 0), (a, b + 1, 0)]
    return [(a, b, 1), (a - 1, b, 1), (a, b - 1, 1)]


@dataclass(frozen=True)
class LatticeGraph:
    """A cell set drawn on a lattice, with its drawing."""

    kind: str
    cells: Tuple[Cell, ...]
    drawing: Drawing

    @cached_property
    def embedding(self) -> PlanarEmbedding:
        return self.drawing.embedding()

    @cached_property
    def outer_face(self) -> int:
        """Face id of the unbounded face of the lattice drawing."""
        return drawn_outer_face(trace_faces(self.embedding), self.drawing.coords)


def lattice_graph(kind: str, cells: Iterable[Cell], name: str) -> LatticeGraph:
    """Draw the boundaries of ``cells``; vertices are numbered in sorted order."""
    if kind not in LATTICE_KINDS:
        raise ValueError(f"unknown lattice kind {kind!r}")
    cells = tuple(sorted(set(cells)))
    edges: Set[Tuple[LatticePoint, LatticePoint]] = set()
    for cell in cells:
        corners = cell_corners(kind, cell)
        for i, p in enumerate(corners):
            q = corners[(i + 1) % len(corners)]
            edges.add((min(p, q), max(p, q)))

    points = sorted({p for edge in edges for p in edge})
    index = {p: i for i, p in enumerate(points)}
    drawing = Drawing(
        name=name,
        coords=tuple(to_cartesian(kind, p) for p in points),
        edges=tuple((index[p], index[q]) for p, q in sorted(edges)),
    )
    return LatticeGraph(kind=kind, cells=cells, drawing=drawing)


def lattice_block(kind: str, rows: int, cols: int) -> LatticeGraph:
    """A rectangular block of cells.

    On the square lattice this is the ``rows x cols`` grid of unit squares.
    On the triangular lattice each row holds ``cols`` triangles alternating
    up and down, so a 1x1 block is a single triangle and a 1x5 block is a
    straight strip of five triangles.
    """
    if rows < 1 or cols < 1:
        raise ValueError(f"block needs at least one row and column, got {rows}x{cols}")
    if kind == SQUARE:
        cells: List[Cell] = [(x, y) for y in range(rows) for x in range(cols)]
    else:
        cells = [(j // 2, b, j % 2) for b in range(rows) for j in range(cols)]
    return lattice_graph(kind, cells, name=f"{kind}-{rows}x{cols}")


def _grow(kind: str, rng: random.Random, target: int) -> List[Cell]:
    origin: Cell = (0, 0) if kind == SQUARE else (0, 0, 0)
    cells = {origin}
    while len(cells) < target:
        frontier = sorted(
            {nb for cell in cells for nb in cell_neighbours(kind, cell)} - cells
        )
        cells.add(rng.choice(frontier))
    return sorted(cells)


def _acceptable(graph: LatticeGraph) -> bool:
    embedding = graph.embedding
    if not MIN_VERTICES <= embedding.vertex_count <= MAX_VERTICES:
        return False
    # a hole would add a face beyond the cells and the unbounded face
    if trace_faces(embedding).face_count != len(graph.cells) + 1:
        return False
    return connectivity(embedding, 2)


def generate_lattice_corpus(seed: int, count: int, size: int) -> List[LatticeGraph]:
    """Random 2-connected lattice graphs without holes.

    Graphs alternate between the square and the triangular lattice. Each is
    grown cell by cell from the origin to a random size between 2 and
    ``size`` cells and kept only if it is 2-connected, has no holes and has
    between 5 and 80 vertices.

    Args:
        seed: Seed for the random generator; equal seeds give equal corpora.
        count: Number of graphs to return.
        size: Largest number of cells per graph.

    Raises:
        ValueError: If ``size`` is below 3 or acceptable graphs stay out of
            reach.
    """
    if size < 3:
        raise ValueError(f"size must be at least 3 cells, got {size}")
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")

    rng = random.Random(seed)
    corpus: List[LatticeGraph] = []
    attempts = 0
    max_attempts = 1000 * max(count, 1)
    while len(corpus) < count:
        attempts += 1
        if attempts > max_attempts:
            raise ValueError(
                f"only {len(corpus)} of {count} lattice graphs found after {max_attempts} attempts"
            )
        kind = LATTICE_KINDS[len(corpus) % 2]
        cells = _grow(kind, rng, rng.randint(2, size))
        graph = lattice_graph(kind, cells, name=f"lattice-{len(corpus) + 1}")
        if _acceptable(graph):
            corpus.append(graph)

    logger.info(f"generated {len(corpus)} lattice graphs in {attempts} attempts (seed {seed})")
    return corpus
