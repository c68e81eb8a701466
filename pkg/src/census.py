"""Face census for a chosen outer face and the Euler identities it must satisfy."""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional

from .errors import DataIntegrityError
from .planar.faces import FaceSet, OuterFaceChoice

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class FaceCensus:
    """Counts of an embedded graph with one face designated as outer.

    ``A[i]`` counts every i-gonal face including the outer one, ``inner_A``
    leaves the outer face out.
    """

    n: int
    edge_count: int
    face_count: int
    k: int
    A: Dict[int, int]
    inner_A: Dict[int, int]
    r: Optional[int]
    interior_vertex_count: int

    @property
    def inner_face_count(self) -> int:
        return self.face_count - 1

    @property
    def is_triangulation(self) -> bool:
        return set(self.A) == {3}


@dataclass(frozen=True)
class IdentityResult:
    name: str
    lhs: int
    rhs: int
    status: str

    @property
    def holds(self) -> bool:
        return self.status != FAIL


def face_census(face_set: FaceSet, choice: OuterFaceChoice, r: Optional[int]) -> FaceCensus:
    """Count faces by size for the given outer face choice."""
    A = Counter(face_set.face_sizes)
    inner = Counter(A)
    inner[choice.k] -= 1
    if inner[choice.k] == 0:
        del inner[choice.k]

    embedding = face_set.embedding
    return FaceCensus(
        n=embedding.vertex_count,
        edge_count=embedding.edge_count,
        face_count=face_set.face_count,
        k=choice.k,
        A=dict(sorted(A.items())),
        inner_A=dict(sorted(inner.items())),
        r=r,
        interior_vertex_count=len(choice.interior_vertices),
    )


def lemma1_check(census: FaceCensus) -> List[IdentityResult]:
    """Evaluate the Euler identities of an r-regular embedded graph.

    All arithmetic is integral. The degree form ``2r = sum (i - r(i-2)/2) A_i``
    is doubled to ``4r = sum (2i - r(i-2)) A_i``. The vertex identity
    ``n = |F| - 2`` only follows for r = 4 and is reported as not applicable
    otherwise.

    Raises:
        ValueError: If the census has no regularity.
    """
    r = census.r
    if r is None:
        raise ValueError("Euler identities need an r-regular graph")

    weighted = sum(i * a for i, a in census.A.items())
    results = [
        _result("edges", 2 * census.edge_count, weighted),
        _result("degrees", r * census.n, weighted),
        _result("faces", census.face_count, sum(census.A.values())),
        _result("angle_sum", 4 * r, sum((2 * i - r * (i - 2)) * a for i, a in census.A.items())),
    ]
    if r == 4:
        results.append(_result("vertices", census.n, census.face_count - 2))
    else:
        results.append(
            IdentityResult("vertices", census.n, census.face_count - 2, NOT_APPLICABLE)
        )
    return results


def validate_census(census: FaceCensus) -> None:
    """Raise if any identity that must hold for this census fails.

    Raises:
        DataIntegrityError: On the first failing identity.
    """
    if census.r is None:
        return
    for result in lemma1_check(census):
        if not result.holds:
            raise DataIntegrityError(
                f"identity '{result.name}' failed: {result.lhs} != {result.rhs} "
                f"(n={census.n}, r={census.r}, A={census.A})"
            )


def triangle_lower_bound_4regular(census: FaceCensus) -> int:
    """Smallest triangle count a 4-regular matchstick graph can have: 4 + k.

    Raises:
        ValueError: If the graph is not 4-regular or the outer face has k < 5.
    """
    if census.r != 4:
        raise ValueError(f"triangle floor needs a 4-regular graph, got r={census.r}")
    if census.k < 5:
        raise ValueError(f"triangle floor needs k >= 5, got k={census.k}")
    return 4 + census.k


def _result(name: str, lhs: int, rhs: int) -> IdentityResult:
    return IdentityResult(name, lhs, rhs, PASS if lhs == rhs else FAIL)
