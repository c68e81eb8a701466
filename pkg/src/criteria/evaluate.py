"""Run the criteria over every choice of outer face of one graph."""

import logging
import os
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..census import face_census, triangle_lower_bound_4regular, validate_census
from ..errors import DataIntegrityError
from ..geometry import find_configuration_centers
from ..optimize import build_conflict_blp, max_disjoint_configurations
from ..planar.embedding import PlanarEmbedding, connectivity_level, regularity
from ..planar.faces import FaceSet, outer_face_choice, trace_faces, vertex_face_profiles
from ..report import ALL_EMBEDDINGS, GIVEN_EMBEDDING, GraphReport, OuterFaceReport, VerdictRecord
from .angles import LEMMA, angle_lp_criterion, build_angle_system, local_angle_criterion
from .area import area_criterion
from .chains import find_triangle_chains, triangle_chain_criterion
from .verdict import AREA, CRITERIA, LOCAL_ANGLE, TRIANGLE_CHAIN, CriterionVerdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvaluationOptions:
    """Which criteria run and how.

    Attributes:
        criteria: Enabled criteria; they always run in the fixed cheap-first order.
        bound_mode: ``lemma`` or ``paper`` bound for neighbouring s-gon corners.
        short_circuit: Stop a candidate outer face at its first rejection.
        lp_dump_dir: Write every angle LP there when set.
        timing: Record elapsed time in the report.
    """

    criteria: Tuple[str, ...] = CRITERIA
    bound_mode: str = LEMMA
    short_circuit: bool = True
    lp_dump_dir: Optional[str] = None
    timing: bool = False


def check_face_structure(face_set: FaceSet) -> None:
    """Raise if the traced faces violate the handshake or Euler count."""
    embedding = face_set.embedding
    if sum(face_set.face_sizes) != 2 * embedding.edge_count:
        raise DataIntegrityError(
            f"face sizes sum to {sum(face_set.face_sizes)}, expected {2 * embedding.edge_count}"
        )
    if embedding.vertex_count - embedding.edge_count + face_set.face_count != 2:
        raise DataIntegrityError(
            f"Euler count fails: V={embedding.vertex_count}, E={embedding.edge_count}, "
            f"F={face_set.face_count}"
        )


def evaluate_graph(
    embedding: PlanarEmbedding,
    options: Optional[EvaluationOptions] = None,
    graph_index: int = 0,
) -> GraphReport:
    """Try every face as the outer face and report which criteria refute it.

    The graph is excluded when every outer face is refuted by at least one
    criterion.

    Raises:
        DataIntegrityError: If the face structure or an Euler identity fails.
    """
    options = options or EvaluationOptions()
    started = time.perf_counter()

    face_set = trace_faces(embedding)
    check_face_structure(face_set)
    profiles = vertex_face_profiles(face_set)
    r = regularity(embedding)
    level = connectivity_level(embedding)
    two_connected = level >= 2
    label = embedding.name or f"g{graph_index + 1}"

    candidates: List[OuterFaceReport] = []
    for f in range(face_set.face_count):
        choice = outer_face_choice(face_set, f)
        census = face_census(face_set, choice, r)
        validate_census(census)

        floor = None
        if r == 4 and choice.k >= 5:
            floor = triangle_lower_bound_4regular(census)
            if census.A.get(3, 0) < floor:
                logger.warning(
                    f"{label}: outer face {f} has {census.A.get(3, 0)} triangles, "
                    f"below the 4-regular floor {floor}"
                )

        system = None
        verdicts: List[CriterionVerdict] = []
        for criterion in CRITERIA:
            if criterion not in options.criteria:
                continue
            if criterion == AREA:
                centers = find_configuration_centers(face_set, profiles, choice)
                blp = max_disjoint_configurations(build_conflict_blp(centers, profiles))
                verdict = area_criterion(census, choice, blp)
            elif criterion == TRIANGLE_CHAIN:
                chains = find_triangle_chains(face_set, choice)
                verdict = triangle_chain_criterion(chains, census, choice, two_connected)
            else:
                if system is None:
                    system = build_angle_system(face_set, choice, two_connected)
                if criterion == LOCAL_ANGLE:
                    verdict = local_angle_criterion(system)
                else:
                    dump_path = None
                    if options.lp_dump_dir:
                        dump_path = os.path.join(options.lp_dump_dir, f"{label}_outer{f}.lp")
                    verdict = angle_lp_criterion(system, options.bound_mode, dump_path)
            verdicts.append(verdict)
            if verdict.rejects and options.short_circuit:
                break

        candidates.append(
            OuterFaceReport(
                face=f,
                k=choice.k,
                face_vertices=[v + 1 for v in face_set.faces[f]],
                verdicts=[
                    VerdictRecord(criterion=v.criterion, outcome=v.outcome, witness=v.witness)
                    for v in verdicts
                ],
                triangle_floor=floor,
            )
        )

    excluded = all(c.rejected for c in candidates)
    rejecting = sorted(
        {v.criterion for c in candidates for v in c.verdicts if v.outcome == "reject"},
        key=CRITERIA.index,
    )
    decisive = None
    if excluded:
        decisive = max((c.first_rejection for c in candidates), key=CRITERIA.index)

    report = GraphReport(
        graph_index=graph_index,
        graph_name=embedding.name,
        n=embedding.vertex_count,
        edge_count=embedding.edge_count,
        face_count=face_set.face_count,
        connectivity=level,
        regularity=r,
        excluded=excluded,
        scope=ALL_EMBEDDINGS if level >= 3 else GIVEN_EMBEDDING,
        rejecting_criteria=rejecting,
        decisive_criterion=decisive,
        per_outer_face=candidates,
        elapsed_ms=(time.perf_counter() - started) * 1000 if options.timing else None,
    )
    logger.debug(
        f"{label}: {'excluded' if excluded else 'survives'} "
        f"({face_set.face_count} outer faces, rejecting {rejecting})"
    )
    return report


def verdict_for(report: GraphReport, face: int, criterion: str) -> Optional[VerdictRecord]:
    """Look up one criterion's verdict for one outer face of a report."""
    for candidate in report.per_outer_face:
        if candidate.face == face:
            return next((v for v in candidate.verdicts if v.criterion == criterion), None)
    return None
