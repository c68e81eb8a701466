"""Streaming filter: decode graphs, evaluate them in parallel, write JSONL.

Reports are written in input order. With ``jobs > 1`` graphs are evaluated
in a process pool behind a bounded window, so memory stays proportional to
the window and not to the stream.
"""

import logging
import time
from collections import Counter, deque
from concurrent.futures import Future, ProcessPoolExecutor
from dataclasses import replace
from typing import Callable, Deque, Iterator, Optional, TextIO, Tuple, Union

from ..criteria.evaluate import EvaluationOptions, evaluate_graph
from ..errors import CertificateError, DataIntegrityError, PlanarFormatError
from ..planar.planar_code import GraphRecord, iter_planar_code_records
from ..planar.rotation_text import iter_rotation_text_records
from ..report import ErrorRecord, GraphReport, RunStats

logger = logging.getLogger(__name__)

AUTO = "auto"
PLANAR_CODE = "planar_code"
TEXT = "text"
INPUT_FORMATS = (AUTO, PLANAR_CODE, TEXT)

_PLANAR_CODE_PREFIX = b">>planar_code"


def detect_format(data: bytes) -> str:
    """``planar_code`` if the stream starts with its header, else ``text``."""
    return PLANAR_CODE if data.startswith(_PLANAR_CODE_PREFIX) else TEXT


def iter_graph_records(data: bytes, input_format: str = AUTO) -> Iterator[GraphRecord]:
    """Decode a graph stream record by record, in either format.

    Raises:
        ValueError: If ``input_format`` is unknown.
    """
    if input_format not in INPUT_FORMATS:
        raise ValueError(f"unknown input format {input_format!r}")
    if input_format == AUTO:
        input_format = detect_format(data)
    if input_format == PLANAR_CODE:
        yield from iter_planar_code_records(data)
        return
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        yield GraphRecord(
            index=0,
            offset=e.start,
            error=PlanarFormatError("rotation text is not valid UTF-8", offset=e.start),
        )
        return
    yield from iter_rotation_text_records(text)


def _evaluate(task: Tuple[GraphRecord, EvaluationOptions]) -> Union[GraphReport, GraphRecord]:
    record, options = task
    try:
        return evaluate_graph(record.embedding, options, graph_index=record.index)
    except (DataIntegrityError, CertificateError) as e:
        return replace(record, embedding=None, error=e)


class _Tally:
    """Accumulates run statistics and writes records in order."""

    def __init__(self, out: TextIO):
        self.out = out
        self.stats = RunStats()
        self.first: Counter = Counter()
        self.decisive: Counter = Counter()

    def graph(self, report: GraphReport) -> None:
        self.stats.graphs_read += 1
        if report.excluded:
            self.stats.excluded_count += 1
            self.decisive[report.decisive_criterion] += 1
        else:
            self.stats.survivor_count += 1
        for candidate in report.per_outer_face:
            if candidate.first_rejection:
                self.first[candidate.first_rejection] += 1
        self.out.write(report.model_dump_json(exclude_none=True) + "\n")

    def count_error(self) -> None:
        self.stats.graphs_read += 1
        self.stats.error_count += 1

    def error(self, record: ErrorRecord) -> None:
        self.count_error()
        self.out.write(record.model_dump_json(exclude_none=True) + "\n")

    def finish(self, started: float) -> RunStats:
        self.out.flush()
        elapsed = time.perf_counter() - started
        self.stats.first_rejections = dict(sorted(self.first.items()))
        self.stats.decisive_rejections = dict(sorted(self.decisive.items()))
        self.stats.wall_time_s = elapsed
        self.stats.throughput = self.stats.graphs_read / elapsed if elapsed > 0 else 0.0
        return self.stats


def _error_record(record: GraphRecord) -> ErrorRecord:
    error = record.error
    return ErrorRecord(
        graph_index=record.index,
        message=getattr(error, "message", str(error)),
        offset=record.offset if record.offset is not None else getattr(error, "offset", None),
        line=record.line if record.line is not None else getattr(error, "line", None),
    )


Pending = Union[Future, GraphReport, GraphRecord]


def run_filter(
    data: bytes,
    out: TextIO,
    options: Optional[EvaluationOptions] = None,
    input_format: str = AUTO,
    lenient: bool = False,
    jobs: int = 1,
    reorder_buffer: int = 64,
    on_stats: Optional[Callable[[RunStats], None]] = None,
) -> RunStats:
    """Evaluate every graph of a stream and write one JSON line per record.

    Args:
        data: Raw input in planar_code or rotation text.
        out: Sink for the JSONL records.
        options: Criteria selection and LP bound mode.
        input_format: ``auto``, ``planar_code`` or ``text``.
        lenient: Write an error record for a malformed graph, or one whose
            evaluation fails an integrity or certificate check, and go on;
            otherwise stop at the first one.
        jobs: Worker processes; 1 evaluates inline.
        reorder_buffer: Most graphs in flight at once when ``jobs > 1``.
        on_stats: Called once with the run statistics, also when a strict
            run stops early. The failing record then counts as an error.

    Returns:
        Run statistics.

    Raises:
        PlanarFormatError: For a malformed record when not lenient. Records
            before it have been written.
        DataIntegrityError: For a graph whose faces fail an identity, when
            not lenient.
        CertificateError: For a solver certificate that fails to verify,
            when not lenient.
    """
    options = options or EvaluationOptions()
    tally = _Tally(out)
    started = time.perf_counter()
    logger.info(f"filter started: jobs={jobs}, criteria={','.join(options.criteria)}")

    def settle(item: Pending) -> None:
        if isinstance(item, Future):
            item = item.result()
        if isinstance(item, GraphRecord):
            if not lenient:
                tally.count_error()
                stats = tally.finish(started)
                logger.error(f"filter stopped after {stats.graphs_read} records: {item.error}")
                if on_stats:
                    on_stats(stats)
                raise item.error
            logger.warning(f"skipping malformed record: {item.error}")
            tally.error(_error_record(item))
        else:
            tally.graph(item)

    records = iter_graph_records(data, input_format)
    if jobs <= 1:
        for record in records:
            settle(_evaluate((record, options)) if record.ok else record)
    else:
        window: Deque[Pending] = deque()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            try:
                for record in records:
                    if record.ok:
                        window.append(pool.submit(_evaluate, (record, options)))
                    else:
                        window.append(record)
                    while len(window) >= max(reorder_buffer, 1):
                        settle(window.popleft())
                while window:
                    settle(window.popleft())
            except BaseException:
                for item in window:
                    if isinstance(item, Future):
                        item.cancel()
                raise

    stats = tally.finish(started)
    logger.info(
        f"filter finished: {stats.graphs_read} graphs, {stats.excluded_count} excluded, "
        f"{stats.survivor_count} survive, {stats.error_count} errors, "
        f"{stats.throughput:.1f} graphs/s"
    )
    if on_stats:
        on_stats(stats)
    return stats
