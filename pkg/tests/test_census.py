"""Tests for the face census and the Euler identities."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.census import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    FaceCensus,
    face_census,
    lemma1_check,
    triangle_lower_bound_4regular,
    validate_census,
)
from src.errors import DataIntegrityError
from src.pipeline.fixtures import FIXTURE_NAMES, load_fixture
from src.planar import outer_face_choice, regularity, trace_faces


def statuses(census):
    return {result.name: result.status for result in lemma1_check(census)}


class TestFaceCensus:
    """Test face counting."""

    def test_capped_grid(self, drawn):
        """Outline 8-gon: eight triangles, four quadrangles and the outer face."""
        face_set, choice = drawn("capped-grid")
        census = face_census(face_set, choice, None)
        assert census.A == {3: 8, 4: 4, 8: 1}
        assert census.inner_A == {3: 8, 4: 4}
        assert (census.n, census.k, census.face_count) == (13, 8, 13)
        assert census.interior_vertex_count == 5
        assert census.inner_face_count == 12
        assert not census.is_triangulation

    def test_octahedron_is_triangulation(self):
        """Every face of the octahedron is a triangle."""
        embedding = load_fixture("octahedron")
        face_set = trace_faces(embedding)
        census = face_census(face_set, outer_face_choice(face_set, 0), regularity(embedding))
        assert census.is_triangulation
        assert census.inner_A == {3: 7}


class TestIdentities:
    """Test the Euler identities."""

    def test_octahedron_all_hold(self):
        """4-regular: all five identities hold, including n = |F| - 2."""
        embedding = load_fixture("octahedron")
        face_set = trace_faces(embedding)
        for f in range(face_set.face_count):
            census = face_census(face_set, outer_face_choice(face_set, f), 4)
            assert set(statuses(census).values()) == {PASS}

    def test_icosahedron_counts(self):
        """5-regular with twenty triangles: the vertex identity is not applicable."""
        census = FaceCensus(
            n=12, edge_count=30, face_count=20, k=3, A={3: 20}, inner_A={3: 19}, r=5,
            interior_vertex_count=9,
        )
        result = statuses(census)
        assert result.pop("vertices") == NOT_APPLICABLE
        assert set(result.values()) == {PASS}
        validate_census(census)

    def test_k4_three_regular(self, k4):
        """K4 satisfies the identities that apply for r = 3."""
        face_set = trace_faces(k4)
        census = face_census(face_set, outer_face_choice(face_set, 0), 3)
        assert statuses(census) == {
            "edges": PASS,
            "degrees": PASS,
            "faces": PASS,
            "angle_sum": PASS,
            "vertices": NOT_APPLICABLE,
        }

    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_regular_fixtures_validate(self, name):
        """Every regular fixture passes validation for every outer face."""
        embedding = load_fixture(name)
        r = regularity(embedding)
        face_set = trace_faces(embedding)
        for f in range(face_set.face_count):
            validate_census(face_census(face_set, outer_face_choice(face_set, f), r))

    def test_corrupt_census_raises(self):
        """A census that breaks an identity is a data integrity error."""
        census = FaceCensus(
            n=6, edge_count=12, face_count=9, k=3, A={3: 9}, inner_A={3: 8}, r=4,
            interior_vertex_count=3,
        )
        assert FAIL in statuses(census).values()
        with pytest.raises(DataIntegrityError, match="faces|edges"):
            validate_census(census)

    def test_needs_regularity(self, drawn):
        """Identities are undefined for irregular graphs; validation skips them."""
        face_set, choice = drawn("capped-grid")
        census = face_census(face_set, choice, None)
        with pytest.raises(ValueError):
            lemma1_check(census)
        validate_census(census)


class TestTriangleFloor:
    """Test the 4-regular triangle floor."""

    def test_floor(self):
        """The floor is 4 + k."""
        census = FaceCensus(
            n=10, edge_count=20, face_count=12, k=5, A={3: 9, 5: 1}, inner_A={3: 9}, r=4,
            interior_vertex_count=5,
        )
        assert triangle_lower_bound_4regular(census) == 9

    @pytest.mark.parametrize("r, k", [(3, 6), (4, 4)])
    def test_preconditions(self, r, k):
        """Only 4-regular graphs with k >= 5 have a floor."""
        census = FaceCensus(
            n=8, edge_count=16, face_count=10, k=k, A={3: 8, k: 1}, inner_A={3: 8}, r=r,
            interior_vertex_count=4,
        )
        with pytest.raises(ValueError):
            triangle_lower_bound_4regular(census)


def census_signature(embedding):
    face_set = trace_faces(embedding)
    r = regularity(embedding)
    signature = Counter()
    for f in range(face_set.face_count):
        census = face_census(face_set, outer_face_choice(face_set, f), r)
        signature[
            (
                census.k,
                tuple(census.A.items()),
                tuple(census.inner_A.items()),
                census.interior_vertex_count,
            )
        ] += 1
    return signature


@settings(max_examples=50, deadline=None)
@given(data=st.data(), name=st.sampled_from(FIXTURE_NAMES))
def test_census_ignores_vertex_names(data, name):
    """Every outer face keeps its counts under a random relabelling."""
    embedding = load_fixture(name)
    permutation = data.draw(st.permutations(range(embedding.vertex_count)))
    assert census_signature(embedding.relabel(permutation)) == census_signature(embedding)
