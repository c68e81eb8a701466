"""Maximum number of face-disjoint configurations as an exact independent set.

Each configuration center is a binary variable; two centers conflict when
one lies on a face around the other. The optimum is found by branch and
bound with a greedy clique-cover upper bound.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from ..geometry import ConfigurationCenter
from ..planar.faces import VertexFaceProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConflictBLP:
    """Eligible vertices and the conflict pairs ``(u, v)`` with ``u < v``."""

    eligible_vertices: Tuple[int, ...]
    conflicts: FrozenSet[Tuple[int, int]]

    def neighbours(self) -> Dict[int, Set[int]]:
        adjacency: Dict[int, Set[int]] = {v: set() for v in self.eligible_vertices}
        for u, v in self.conflicts:
            adjacency[u].add(v)
            adjacency[v].add(u)
        return adjacency


@dataclass(frozen=True)
class BLPOutcome:
    optimum: int
    chosen_set: Tuple[int, ...]
    node_count: int


def build_conflict_blp(
    centers: Sequence[ConfigurationCenter], profiles: Sequence[VertexFaceProfile]
) -> ConflictBLP:
    """Conflict model over ``centers``; ``u`` and ``v`` conflict if either lies in the other's fn."""
    eligible = tuple(sorted(c.vertex for c in centers))
    conflicts = set()
    for i, v in enumerate(eligible):
        for u in eligible[i + 1 :]:
            if u in profiles[v].fn or v in profiles[u].fn:
                conflicts.add((v, u))
    return ConflictBLP(eligible_vertices=eligible, conflicts=frozenset(conflicts))


def max_disjoint_configurations(blp: ConflictBLP) -> BLPOutcome:
    """Exact maximum independent set of the conflict graph.

    Vertices are branched on in ascending order, including the vertex
    before excluding it, and only strictly better sets replace the
    incumbent, so the chosen set is reproducible.
    """
    adjacency = blp.neighbours()
    best: List[int] = []
    nodes = 0

    def search(candidates: List[int], chosen: List[int]) -> None:
        nonlocal best, nodes
        nodes += 1
        if not candidates:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + _clique_cover_bound(candidates, adjacency) <= len(best):
            return

        v = candidates[0]
        rest = candidates[1:]
        chosen.append(v)
        search([u for u in rest if u not in adjacency[v]], chosen)
        chosen.pop()
        search(rest, chosen)

    search(list(blp.eligible_vertices), [])
    logger.debug(
        f"independent set of size {len(best)} over {len(blp.eligible_vertices)} centers "
        f"in {nodes} nodes"
    )
    return BLPOutcome(optimum=len(best), chosen_set=tuple(best), node_count=nodes)


def _clique_cover_bound(candidates: List[int], adjacency: Dict[int, Set[int]]) -> int:
    """Number of cliques in a greedy cover; an independent set uses at most one per clique."""
    cliques: List[List[int]] = []
    for v in candidates:
        for clique in cliques:
            if all(u in adjacency[v] for u in clique):
                clique.append(v)
                break
        else:
            cliques.append([v])
    return len(cliques)
