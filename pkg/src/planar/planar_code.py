"""Reader and writer for plantri's planar_code binary format.

A stream starts with the header ``>>planar_code<<`` followed by records.
Each record is the vertex count ``n`` and, for every vertex in turn, its
neighbours in clockwise order terminated by ``0``. Vertex ids are 1-based.
Records with ``n > 255`` start with a ``0`` byte and then use 16-bit
entries throughout (little-endian unless the header says ``be``).
"""

import io
import logging
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Iterator, List, Optional, Union

from ..errors import EmbeddingError, MatchstickError, PlanarFormatError
from .embedding import PlanarEmbedding

logger = logging.getLogger(__name__)

HEADER = b">>planar_code<<"
_HEADERS = {
    b">>planar_code<<": "little",
    b">>planar_code le<<": "little",
    b">>planar_code be<<": "big",
}
_MAX_HEADER = max(len(h) for h in _HEADERS)


@dataclass(frozen=True)
class GraphRecord:
    """Outcome of decoding one record: an embedding or the reason it failed.

    ``offset`` locates a planar_code record in bytes, ``line`` locates the
    header of a rotation-text block. ``error`` is a :class:`PlanarFormatError`
    from decoding, or the error that stopped the evaluation of the graph.
    """

    index: int
    offset: Optional[int] = None
    line: Optional[int] = None
    embedding: Optional[PlanarEmbedding] = None
    error: Optional[MatchstickError] = None

    @property
    def ok(self) -> bool:
        return self.error is None


class _Cursor:
    """Sequential reader that tracks the absolute byte offset."""

    def __init__(self, stream: BinaryIO):
        self.stream = stream
        self.offset = 0

    def read(self, size: int) -> bytes:
        chunk = self.stream.read(size)
        self.offset += len(chunk)
        return chunk

    def at_end(self) -> bool:
        peek = getattr(self.stream, "peek", None)
        if peek is not None:
            return not peek(1)
        # Non-peekable streams: read one byte and push the cursor back.
        position = self.stream.tell()
        chunk = self.stream.read(1)
        self.stream.seek(position)
        return not chunk


def _as_stream(source: Union[bytes, bytearray, BinaryIO]) -> BinaryIO:
    if isinstance(source, (bytes, bytearray)):
        return io.BytesIO(bytes(source))
    return source


def read_header(cursor: _Cursor) -> str:
    """Consume the header and return the byte order of 16-bit entries."""
    head = cursor.read(len(HEADER))
    if head == HEADER:
        return "little"
    if head.startswith(b">>planar_code "):
        rest = cursor.read(_MAX_HEADER - len(HEADER))
        order = _HEADERS.get(head + rest)
        if order is not None:
            return order
        head += rest
    raise PlanarFormatError(f"malformed planar_code header {head!r}", offset=0)


def iter_planar_code_records(source: Union[bytes, bytearray, BinaryIO]) -> Iterator[GraphRecord]:
    """Decode records one at a time without raising on bad records.

    A record with structural damage inside (bad neighbour id, asymmetric
    adjacency, disconnected graph) is reported and decoding continues with
    the next record. A truncated record ends the stream.

    Raises:
        PlanarFormatError: If the header is missing or malformed.
    """
    cursor = _Cursor(_as_stream(source))
    byteorder = read_header(cursor)

    index = 0
    while not cursor.at_end():
        start = cursor.offset
        try:
            lists = _read_record(cursor, byteorder, index)
        except PlanarFormatError as e:
            yield GraphRecord(index=index, offset=start, error=e)
            return

        try:
            embedding = _build(lists, index, start)
        except PlanarFormatError as e:
            yield GraphRecord(index=index, offset=start, error=e)
        else:
            yield GraphRecord(index=index, offset=start, embedding=embedding)
        index += 1


def parse_planar_code(source: Union[bytes, bytearray, BinaryIO]) -> Iterator[PlanarEmbedding]:
    """Yield the embeddings of a planar_code stream in order.

    Raises:
        PlanarFormatError: On the first malformed header or record.
    """
    for record in iter_planar_code_records(source):
        if record.error is not None:
            raise record.error
        assert record.embedding is not None
        yield record.embedding


def _read_entry(cursor: _Cursor, width: int, byteorder: str, index: int) -> int:
    raw = cursor.read(width)
    if len(raw) < width:
        raise PlanarFormatError("truncated graph record", offset=cursor.offset, graph_index=index)
    return int.from_bytes(raw, byteorder)


def _read_record(cursor: _Cursor, byteorder: str, index: int) -> List[List[int]]:
    n = _read_entry(cursor, 1, byteorder, index)
    width = 1
    if n == 0:
        width = 2
        n = _read_entry(cursor, 2, byteorder, index)
        if n == 0:
            raise PlanarFormatError(
                "graph record with zero vertices", offset=cursor.offset, graph_index=index
            )

    lists: List[List[int]] = []
    for _ in range(n):
        nbrs = []
        while True:
            entry = _read_entry(cursor, width, byteorder, index)
            if entry == 0:
                break
            if entry > n:
                # Keep consuming so the next record starts at the right offset.
                nbrs.append(-entry)
            else:
                nbrs.append(entry - 1)
        lists.append(nbrs)
    return lists


def _build(lists: List[List[int]], index: int, offset: int) -> PlanarEmbedding:
    n = len(lists)
    for v, nbrs in enumerate(lists):
        for u in nbrs:
            if u < 0:
                raise PlanarFormatError(
                    f"vertex {v + 1}: neighbour id {-u} out of range 1..{n}",
                    offset=offset,
                    graph_index=index,
                )
    try:
        return PlanarEmbedding.from_rotation(lists)
    except EmbeddingError as e:
        raise PlanarFormatError(str(e), offset=offset, graph_index=index) from e


def serialize_planar_code(embeddings: Iterable[PlanarEmbedding]) -> bytes:
    """Encode embeddings as a planar_code stream (header included).

    Raises:
        PlanarFormatError: If a graph has more than 65535 vertices.
    """
    out = bytearray(HEADER)
    for index, embedding in enumerate(embeddings):
        out += encode_record(embedding, index)
    return bytes(out)


def encode_record(embedding: PlanarEmbedding, index: int = 0) -> bytes:
    """Encode a single record body, choosing 8- or 16-bit entries by size."""
    n = embedding.vertex_count
    if n > 0xFFFF:
        raise PlanarFormatError(
            f"{n} vertices exceed the planar_code range 1..65535", graph_index=index
        )

    if n <= 0xFF:
        body = bytearray([n])
        for nbrs in embedding.rotation:
            body.extend(u + 1 for u in nbrs)
            body.append(0)
        return bytes(body)

    body = bytearray(b"\x00")
    body += n.to_bytes(2, "little")
    for nbrs in embedding.rotation:
        for u in nbrs:
            body += (u + 1).to_bytes(2, "little")
        body += b"\x00\x00"
    return bytes(body)
