"""Built-in fixture graphs, stored as straight-line drawings.

The drawings only fix the combinatorial embedding; they need not be
unit-distance.
"""

import logging
import math
from typing import Dict, Iterable, List, Sequence, Tuple

from ..errors import FixtureError
from ..planar.drawing import Drawing, Point, drawn_outer_face
from ..planar.embedding import PlanarEmbedding
from ..planar.faces import trace_faces
from ..planar.rotation_text import format_rotation_text

logger = logging.getLogger(__name__)


def _drawing(name: str, segments: Iterable[Tuple[Point, Point]]) -> Drawing:
    """Build a drawing from segments given by endpoint coordinates.

    Vertices are numbered in order of first appearance.
    """
    index: Dict[Point, int] = {}
    edges = []
    for p, q in segments:
        for point in (p, q):
            if point not in index:
                index[point] = len(index)
        edges.append((index[p], index[q]))
    coords = tuple(sorted(index, key=index.__getitem__))
    return Drawing(name=name, coords=coords, edges=tuple(edges))


def _path(*points: Point) -> List[Tuple[Point, Point]]:
    return list(zip(points, points[1:]))


def _star(center: Point, *points: Point) -> List[Tuple[Point, Point]]:
    return [(center, p) for p in points]


def _capped_grid() -> Drawing:
    # 3x3 grid of four squares with a triangular cap on each side.
    segments = []
    for y in (1, 2, 3):
        segments += _path((1, y), (2, y), (3, y))
    for x in (1, 2, 3):
        segments += _path((x, 1), (x, 2), (x, 3))
    segments += _star((0, 2), (1, 1), (1, 2), (1, 3))
    segments += _star((2, 0), (1, 1), (2, 1), (3, 1))
    segments += _star((4, 2), (3, 1), (3, 2), (3, 3))
    segments += _star((2, 4), (1, 3), (2, 3), (3, 3))
    return _drawing("capped-grid", segments)


def _quad_column() -> Drawing:
    # Column of three quadrangles between two fans of three triangles.
    segments = []
    for y in range(4):
        segments += _path((1, y), (2, y))
    segments += _path((1, 0), (1, 1), (1, 2), (1, 3))
    segments += _path((2, 0), (2, 1), (2, 2), (2, 3))
    segments += _star((0, 1.5), (1, 0), (1, 1), (1, 2), (1, 3))
    segments += _star((3, 1.5), (2, 0), (2, 1), (2, 2), (2, 3))
    return _drawing("quad-column", segments)


def _pentagon_house() -> Drawing:
    # One quadrangle and one pentagon among eight triangles, heptagonal outline.
    segments = [((1, 0), (2, 0))]
    segments += _path((0, 1), (1, 1), (2, 1), (3, 1))
    segments += [((0, 2), (1, 2)), ((2, 2), (3, 2))]
    segments += _path((1, 0), (1, 1), (1, 2))
    segments += _path((2, 0), (2, 1), (2, 2))
    segments += [((0, 1), (0, 2)), ((3, 1), (3, 2))]
    segments += [((0, 1), (1, 0)), ((0, 1), (1, 2)), ((3, 1), (2, 0)), ((3, 1), (2, 2))]
    segments += _star((1.5, 3), (1, 2), (2, 2), (0, 2), (3, 2))
    return _drawing("pentagon-house", segments)


def _pentagon_bridge() -> Drawing:
    # Pentagon and two quadrangles among ten triangles, 9-gonal outline.
    segments = _path((0, 1), (2, 1), (3, 1), (4, 1), (5, 1))
    segments += _path((0, 2), (2, 2), (3, 2), (4, 2), (5, 2))
    segments += [((0, 1), (0, 2))]
    segments += _path((3, 0), (3, 1), (3, 2), (3, 3))
    segments += [((4, 1), (4, 2)), ((5, 1), (5, 2))]
    segments += [((4, 2), (3, 3)), ((5, 2), (3, 3)), ((4, 1), (3, 0)), ((5, 1), (3, 0))]
    segments += [((2, 2), (3, 3)), ((2, 1), (3, 0))]
    segments += _star((6, 1.5), (5, 2), (5, 1))
    segments += _star((1, 1.5), (0, 1), (0, 2), (2, 1), (2, 2))
    return _drawing("pentagon-bridge", segments)


def _triangle_strip() -> Drawing:
    bottom = [(0, 0), (2, 0), (4, 0), (6, 0)]
    top = [(1, 1.5), (3, 1.5), (5, 1.5)]
    zigzag = [bottom[0], top[0], bottom[1], top[1], bottom[2], top[2], bottom[3]]
    return _drawing("triangle-strip", _path(*bottom) + _path(*top) + _path(*zigzag))


def _configuration() -> Drawing:
    # A vertex surrounded by two triangles and two quadrangles.
    center = (2, 1)
    segments = _star(center, (1, 0), (1, 2), (3, 0), (3, 2))
    segments += [((1, 0), (3, 0)), ((1, 2), (3, 2))]
    segments += _path((1, 0), (0, 1), (1, 2))
    segments += _path((3, 0), (4, 1), (3, 2))
    return _drawing("configuration-3344", segments)


def _octahedron() -> Drawing:
    a, b, c = (0, 0), (6, 0), (3, 5)
    d, e, f = (3, 1), (4, 2.5), (2, 2.5)
    segments = [(a, b), (b, c), (c, a), (a, d), (b, d), (b, e)]
    segments += [(c, e), (c, f), (a, f), (d, e), (e, f), (f, d)]
    return _drawing("octahedron", segments)


def _k4() -> Drawing:
    outer = [(0, 0), (4, 0), (2, 3.5)]
    return _drawing("k4", _path(*outer, outer[0]) + _star((2, 1.2), *outer))


def _polygon(name: str, k: int) -> Drawing:
    points = [
        (round(math.cos(2 * math.pi * i / k), 12), round(math.sin(2 * math.pi * i / k), 12))
        for i in range(k)
    ]
    return _drawing(name, _path(*points, points[0]))


_BUILDERS = {
    "capped-grid": _capped_grid,
    "quad-column": _quad_column,
    "pentagon-house": _pentagon_house,
    "pentagon-bridge": _pentagon_bridge,
    "triangle-strip": _triangle_strip,
    "configuration-3344": _configuration,
    "octahedron": _octahedron,
    "k4": _k4,
    "triangle": lambda: _polygon("triangle", 3),
    "square": lambda: _polygon("square", 4),
}

FIXTURE_NAMES = tuple(_BUILDERS)

# Graphs that are not matchstick graphs, each refuted for every outer face.
EXCLUDED_CORPUS = ("capped-grid", "quad-column", "pentagon-house", "pentagon-bridge", "octahedron")


def fixture_drawing(name: str) -> Drawing:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise FixtureError(
            f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}"
        ) from None


def load_fixture(name: str) -> PlanarEmbedding:
    return fixture_drawing(name).embedding()


def depicted_outer_face(name: str) -> int:
    """Face id of the unbounded face in the fixture's drawing."""
    drawing = fixture_drawing(name)
    return drawn_outer_face(trace_faces(drawing.embedding()), drawing.coords)


def emit_fixtures(names: Sequence[str]) -> str:
    """Rotation text for the named fixtures (``["all"]`` for every fixture).

    Raises:
        FixtureError: If a name is unknown.
    """
    if list(names) == ["all"]:
        names = FIXTURE_NAMES
    embeddings = [load_fixture(name) for name in names]
    logger.info(f"emitting {len(embeddings)} fixture(s)")
    return format_rotation_text(embeddings)
