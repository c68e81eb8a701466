"""Plain-text rotation fixtures.

One graph per block::

    # comment
    graph square 4
    1: 2 4
    2: 3 1
    3: 4 2
    4: 1 3

Vertex ids are 1-based and each line lists the neighbours clockwise.
Blocks end at a blank line, at the next ``graph`` line, or at end of input.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..errors import EmbeddingError, PlanarFormatError
from .embedding import PlanarEmbedding
from .planar_code import GraphRecord

logger = logging.getLogger(__name__)


class _Block:
    def __init__(self, name: str, n: int, line: int):
        self.name = name
        self.n = n
        self.line = line
        self.rows: Dict[int, List[int]] = {}
        self.error: Optional[PlanarFormatError] = None


def iter_rotation_text_records(text: str) -> Iterator[GraphRecord]:
    """Decode rotation-text blocks, reporting bad blocks instead of raising.

    After an error the rest of the offending block is skipped.
    """
    index = 0
    block: Optional[_Block] = None
    stray: Optional[PlanarFormatError] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not raw.strip():
            if block is not None:
                yield _finish(block, index)
                index += 1
                block = None
            continue
        if not content:
            continue

        tokens = content.split()
        if tokens[0] == "graph":
            if block is not None:
                yield _finish(block, index)
                index += 1
            block = _open_block(tokens, lineno, index)
            continue

        if block is None:
            if stray is None:
                stray = PlanarFormatError(
                    "vertex line outside a graph block", graph_index=index, line=lineno
                )
                yield GraphRecord(index=index, line=lineno, error=stray)
                index += 1
            continue
        stray = None
        if block.error is None:
            block.error = _add_row(block, content, lineno, index)

    if block is not None:
        yield _finish(block, index)


def parse_rotation_text(text: str) -> Iterator[PlanarEmbedding]:
    """Yield the embeddings of a rotation-text document.

    Raises:
        PlanarFormatError: On the first malformed block.
    """
    for record in iter_rotation_text_records(text):
        if record.error is not None:
            raise record.error
        assert record.embedding is not None
        yield record.embedding


def format_rotation_text(
    embeddings: Iterable[PlanarEmbedding], comment: Optional[str] = None
) -> str:
    """Render embeddings as rotation-text blocks separated by blank lines."""
    lines: List[str] = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    for index, embedding in enumerate(embeddings):
        if lines:
            lines.append("")
        name = embedding.name or f"g{index + 1}"
        lines.append(f"graph {name} {embedding.vertex_count}")
        for v, nbrs in enumerate(embedding.rotation):
            lines.append(f"{v + 1}: " + " ".join(str(u + 1) for u in nbrs))
    return "\n".join(lines) + "\n" if lines else ""


def _open_block(tokens: List[str], lineno: int, index: int) -> _Block:
    block = _Block(name="", n=0, line=lineno)
    if len(tokens) != 3:
        block.error = PlanarFormatError(
            "graph header must read 'graph <name> <n>'", graph_index=index, line=lineno
        )
        return block
    block.name = tokens[1]
    try:
        block.n = int(tokens[2])
    except ValueError:
        block.n = 0
    if block.n < 1:
        block.error = PlanarFormatError(
            f"invalid vertex count {tokens[2]!r}", graph_index=index, line=lineno
        )
    return block


def _add_row(block: _Block, content: str, lineno: int, index: int) -> Optional[PlanarFormatError]:
    head, sep, tail = content.partition(":")
    if not sep:
        return PlanarFormatError(
            f"expected '<v>: <neighbours>', got {content!r}", graph_index=index, line=lineno
        )
    try:
        v = int(head)
        nbrs = [int(token) for token in tail.split()]
    except ValueError:
        return PlanarFormatError(
            f"non-integer vertex id in {content!r}", graph_index=index, line=lineno
        )

    if not 1 <= v <= block.n:
        return PlanarFormatError(
            f"vertex {v} out of range 1..{block.n}", graph_index=index, line=lineno
        )
    if v in block.rows:
        return PlanarFormatError(f"duplicate vertex line {v}", graph_index=index, line=lineno)
    for u in nbrs:
        if not 1 <= u <= block.n:
            return PlanarFormatError(
                f"vertex {v}: neighbour id {u} out of range 1..{block.n}",
                graph_index=index,
                line=lineno,
            )
    block.rows[v] = [u - 1 for u in nbrs]
    return None


def _finish(block: _Block, index: int) -> GraphRecord:
    if block.error is not None:
        logger.debug(f"rotation text block {index} rejected: {block.error}")
        return GraphRecord(index=index, line=block.line, error=block.error)

    missing = [v for v in range(1, block.n + 1) if v not in block.rows]
    if missing:
        shown = ", ".join(str(v) for v in missing[:5])
        error = PlanarFormatError(
            f"missing vertex line(s) {shown}", graph_index=index, line=block.line
        )
        return GraphRecord(index=index, line=block.line, error=error)

    rotation: List[Tuple[int, ...]] = [tuple(block.rows[v]) for v in range(1, block.n + 1)]
    try:
        embedding = PlanarEmbedding.from_rotation(rotation, name=block.name)
    except EmbeddingError as e:
        error = PlanarFormatError(str(e), graph_index=index, line=block.line)
        return GraphRecord(index=index, line=block.line, error=error)
    return GraphRecord(index=index, line=block.line, embedding=embedding)
