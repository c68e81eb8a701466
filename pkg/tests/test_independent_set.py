"""Tests for the configuration conflict model and its exact optimum."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.geometry import find_configuration_centers
from src.optimize import ConflictBLP, build_conflict_blp, max_disjoint_configurations
from src.planar import vertex_face_profiles


def brute_force(blp: ConflictBLP) -> int:
    """Largest independent set by enumerating every independent set."""
    neighbours = blp.neighbours()
    vertices = list(blp.eligible_vertices)

    def largest(i: int, blocked: frozenset) -> int:
        if i == len(vertices):
            return 0
        v = vertices[i]
        best = largest(i + 1, blocked)
        if v not in blocked:
            best = max(best, 1 + largest(i + 1, blocked | set(neighbours.get(v, ()))))
        return best

    return largest(0, frozenset())


def random_blp(rng: random.Random) -> ConflictBLP:
    n = rng.randint(0, 18)
    p = rng.uniform(0.3, 0.9)
    conflicts = frozenset(
        (u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p
    )
    return ConflictBLP(eligible_vertices=tuple(range(n)), conflicts=conflicts)


class TestConflictModel:
    """Test building the conflict model from a drawing."""

    def test_capped_grid(self, drawn):
        """Mid-side centers conflict with their side neighbours: a 4-cycle."""
        face_set, choice = drawn("capped-grid")
        profiles = vertex_face_profiles(face_set)
        blp = build_conflict_blp(find_configuration_centers(face_set, profiles, choice), profiles)
        assert len(blp.eligible_vertices) == 4
        assert len(blp.conflicts) == 4
        assert all(len(nbrs) == 2 for nbrs in blp.neighbours().values())

        outcome = max_disjoint_configurations(blp)
        assert outcome.optimum == 2 == brute_force(blp)
        a, b = outcome.chosen_set
        assert (min(a, b), max(a, b)) not in blp.conflicts


class TestBranchAndBound:
    """Test the exact optimum."""

    def test_empty(self):
        """No centers, nothing chosen."""
        outcome = max_disjoint_configurations(ConflictBLP((), frozenset()))
        assert outcome.optimum == 0
        assert outcome.chosen_set == ()

    def test_deterministic_choice(self):
        """Ties are broken towards the smallest vertex ids."""
        blp = ConflictBLP((0, 1, 2, 3), frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
        assert max_disjoint_configurations(blp).chosen_set == (0, 2)

    @pytest.mark.slow
    def test_matches_brute_force(self):
        """Five hundred seeded conflict graphs of up to 18 centers agree with enumeration."""
        rng = random.Random(1234)
        for _ in range(500):
            blp = random_blp(rng)
            outcome = max_disjoint_configurations(blp)
            assert outcome.optimum == brute_force(blp)
            assert len(outcome.chosen_set) == outcome.optimum
            for u, v in itertools.combinations(sorted(outcome.chosen_set), 2):
                assert (u, v) not in blp.conflicts


@settings(max_examples=100, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=8),
    edges=st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7))),
)
def test_optimum_is_independent_and_maximum(n, edges):
    """The chosen set is conflict-free and as large as any independent set."""
    conflicts = frozenset((min(u, v), max(u, v)) for u, v in edges if u != v and u < n and v < n)
    blp = ConflictBLP(tuple(range(n)), conflicts)
    outcome = max_disjoint_configurations(blp)
    assert outcome.optimum == brute_force(blp)
