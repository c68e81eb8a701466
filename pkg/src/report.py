"""Report records written by the filter, one JSON object per line."""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

ALL_EMBEDDINGS = "all embeddings"
GIVEN_EMBEDDING = "given embedding"


class VerdictRecord(BaseModel):
    """One criterion's outcome for one outer face."""

    criterion: str
    outcome: Literal["reject", "pass", "inapplicable"]
    witness: Dict[str, Any] = Field(default_factory=dict)


class OuterFaceReport(BaseModel):
    """Verdicts for one choice of outer face."""

    face: int
    k: int
    face_vertices: List[int]
    verdicts: List[VerdictRecord]
    triangle_floor: Optional[int] = None

    @property
    def rejected(self) -> bool:
        return any(v.outcome == "reject" for v in self.verdicts)

    @property
    def first_rejection(self) -> Optional[str]:
        return next((v.criterion for v in self.verdicts if v.outcome == "reject"), None)


class GraphReport(BaseModel):
    """Per-graph verdict.

    ``excluded`` holds iff every outer face was rejected. For graphs that
    are not 3-connected ``scope`` says the verdict covers only the given
    embedding.
    """

    kind: Literal["graph"] = "graph"
    graph_index: int
    graph_name: Optional[str] = None
    n: int
    edge_count: int
    face_count: int
    connectivity: int
    regularity: Optional[int] = None
    excluded: bool
    scope: str
    rejecting_criteria: List[str]
    decisive_criterion: Optional[str] = None
    per_outer_face: List[OuterFaceReport]
    elapsed_ms: Optional[float] = None


class ErrorRecord(BaseModel):
    """A record that could not be decoded."""

    kind: Literal["error"] = "error"
    graph_index: int
    message: str
    offset: Optional[int] = None
    line: Optional[int] = None


class RunStats(BaseModel):
    """Totals for one filter run.

    ``graphs_read = excluded_count + survivor_count + error_count``.
    """

    kind: Literal["stats"] = "stats"
    graphs_read: int = 0
    excluded_count: int = 0
    survivor_count: int = 0
    error_count: int = 0
    first_rejections: Dict[str, int] = Field(default_factory=dict)
    decisive_rejections: Dict[str, int] = Field(default_factory=dict)
    wall_time_s: float = 0.0
    throughput: float = 0.0
