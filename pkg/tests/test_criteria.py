"""Tests for the area, triangle chain and angle criteria."""

import math
from fractions import Fraction

import pytest

from src.census import FaceCensus, face_census
from src.criteria import (
    ANGLE_LP,
    LEMMA,
    PAPER,
    TriangleChain,
    angle_lp_criterion,
    area_criterion,
    area_lower_bound,
    build_angle_lp,
    build_angle_system,
    find_triangle_chains,
    local_angle_criterion,
    triangle_chain_criterion,
)
from src.criteria.verdict import INAPPLICABLE, PASS, REJECT
from src.geometry import find_configuration_centers
from src.optimize import (
    INFEASIBLE,
    OPTIMAL,
    build_conflict_blp,
    max_disjoint_configurations,
    simplex_solve,
    verify,
)
from src.pipeline.fixtures import FIXTURE_NAMES, load_fixture
from src.planar import (
    Drawing,
    OuterFaceChoice,
    PlanarEmbedding,
    connectivity,
    outer_face_choice,
    regularity,
    trace_faces,
    vertex_face_profiles,
)


def run_area(face_set, choice):
    profiles = vertex_face_profiles(face_set)
    centers = find_configuration_centers(face_set, profiles, choice)
    blp = max_disjoint_configurations(build_conflict_blp(centers, profiles))
    census = face_census(face_set, choice, regularity(face_set.embedding))
    return area_criterion(census, choice, blp), census, blp


def bowtie():
    """Two triangles sharing one vertex."""
    coords = ((0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0))
    edges = ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4))
    return Drawing("bowtie", coords, edges).embedding()


class TestAreaCriterion:
    """Test the area argument."""

    def test_capped_grid_rejected(self, drawn):
        """Eight triangles and two disjoint configurations overfill the octagon."""
        face_set, choice = drawn("capped-grid")
        verdict, census, blp = run_area(face_set, choice)

        assert verdict.outcome == REJECT
        assert verdict.witness["k"] == 8
        assert verdict.witness["lower_bound"] == pytest.approx(12.0)
        capacity = 8 / math.tan(math.pi / 8) / math.sqrt(3)
        assert verdict.witness["capacity"] == pytest.approx(capacity)
        assert verdict.witness["inner_triangles"] == 8
        assert verdict.witness["inner_odd_faces"] == 0
        assert len(verdict.witness["configurations"]) == 2
        assert area_lower_bound(census, blp) == pytest.approx(12.0)

    def test_configuration_passes(self, drawn):
        """A single configuration fits easily inside its hexagonal outline."""
        face_set, choice = drawn("configuration-3344")
        verdict, _, blp = run_area(face_set, choice)
        assert verdict.outcome == PASS
        assert blp.optimum == 1
        assert verdict.witness["lower_bound"] == pytest.approx(4.0)

    def test_pentagon_bridge_passes(self, drawn):
        """The two configuration centers conflict, so only one counts."""
        face_set, choice = drawn("pentagon-bridge")
        verdict, _, blp = run_area(face_set, choice)
        assert verdict.outcome == PASS
        assert blp.optimum == 1
        assert verdict.witness["lower_bound"] == pytest.approx(13.0)
        assert verdict.witness["capacity"] > 14

    def test_octahedron_rejected_everywhere(self):
        """Every outer face of the octahedron is a triangle with seven triangles inside."""
        face_set = trace_faces(load_fixture("octahedron"))
        for f in range(face_set.face_count):
            verdict, _, _ = run_area(face_set, outer_face_choice(face_set, f))
            assert verdict.outcome == REJECT

    def test_single_edge_inapplicable(self):
        """The only face of a lone edge is a 2-gon with no capacity."""
        face_set = trace_faces(PlanarEmbedding.from_rotation([[1], [0]]))
        verdict, census, _ = run_area(face_set, outer_face_choice(face_set, 0))
        assert verdict.outcome == INAPPLICABLE
        assert verdict.witness["k"] == 2
        assert census.inner_A == {}


class TestTriangleChains:
    """Test strip detection and the chain criterion."""

    def test_strip(self, drawn):
        """Five triangles glued in a row form one straight strip."""
        face_set, choice = drawn("triangle-strip")
        chains = find_triangle_chains(face_set, choice)

        assert chains[0].t == 5
        assert chains[0].s == 3
        assert sum(1 for chain in chains if chain.t == 5) == 1
        assert len(chains[0].rungs) == 4
        assert len(chains[0].apexes) == 3

    def test_strip_filling_inner_region_passes(self, drawn):
        """A strip that is the whole inner region proves nothing."""
        face_set, choice = drawn("triangle-strip")
        census = face_census(face_set, choice, regularity(face_set.embedding))
        verdict = triangle_chain_criterion(find_triangle_chains(face_set, choice), census, choice)
        assert verdict.outcome == PASS
        assert verdict.witness["longest"] == 5

    def test_long_strip_rejects_short_outline(self):
        """A seven-triangle strip needs an outer face of length at least ten."""
        chain = TriangleChain(
            triangles=tuple(range(7)),
            apexes=tuple(range(5)),
            rungs=tuple((i, i + 1) for i in range(6)),
        )
        census = FaceCensus(
            n=12, edge_count=21, face_count=11, k=8,
            A={3: 9, 4: 1, 8: 1}, inner_A={3: 9, 4: 1}, r=None, interior_vertex_count=4,
        )
        choice = OuterFaceChoice(
            outer_face=10, boundary_vertices=frozenset(), interior_vertices=frozenset(), k=8
        )
        verdict = triangle_chain_criterion([chain], census, choice)
        assert verdict.outcome == REJECT
        assert verdict.witness["s"] == 4
        assert verdict.witness["required_k"] == 10
        assert verdict.witness["rungs"][0] == [1, 2]

        roomy = OuterFaceChoice(
            outer_face=10, boundary_vertices=frozenset(), interior_vertices=frozenset(), k=10
        )
        assert triangle_chain_criterion([chain], census, roomy).outcome == PASS

    def test_triangulation_passes(self, drawn):
        face_set, choice = drawn("octahedron")
        census = face_census(face_set, choice, 4)
        verdict = triangle_chain_criterion(find_triangle_chains(face_set, choice), census, choice)
        assert verdict.outcome == PASS
        assert verdict.witness == {"reason": "triangulation"}

    def test_pentagon_bridge_passes(self, drawn):
        face_set, choice = drawn("pentagon-bridge")
        census = face_census(face_set, choice, regularity(face_set.embedding))
        chains = find_triangle_chains(face_set, choice)
        assert max(chain.t for chain in chains) == 3
        assert triangle_chain_criterion(chains, census, choice).outcome == PASS

    def test_not_two_connected_inapplicable(self):
        embedding = bowtie()
        face_set = trace_faces(embedding)
        outer = next(f for f in range(face_set.face_count) if face_set.face_size(f) == 6)
        choice = outer_face_choice(face_set, outer)
        census = face_census(face_set, choice, regularity(embedding))
        verdict = triangle_chain_criterion(
            find_triangle_chains(face_set, choice), census, choice, connectivity(embedding, 2)
        )
        assert verdict.outcome == INAPPLICABLE


class TestLocalAngles:
    """Test the local angle rule."""

    def test_quad_column_rejected(self, drawn):
        face_set, choice = drawn("quad-column")
        verdict = local_angle_criterion(build_angle_system(face_set, choice))
        assert verdict.outcome == REJECT

    def test_pentagon_house_forced_negative(self, drawn):
        """The heptagon's last unknown corner is forced below zero."""
        face_set, choice = drawn("pentagon-house")
        verdict = local_angle_criterion(build_angle_system(face_set, choice))
        assert verdict.outcome == REJECT
        assert verdict.witness["forced_angle"] == "-2/3"

    def test_pentagon_bridge_passes(self, drawn):
        face_set, choice = drawn("pentagon-bridge")
        assert local_angle_criterion(build_angle_system(face_set, choice)).outcome == PASS

    def test_square_passes(self, drawn):
        face_set, choice = drawn("square")
        assert local_angle_criterion(build_angle_system(face_set, choice)).outcome == PASS

    def test_not_two_connected_inapplicable(self):
        face_set = trace_faces(bowtie())
        system = build_angle_system(face_set, outer_face_choice(face_set, 0))
        assert not system.two_connected
        assert local_angle_criterion(system).outcome == INAPPLICABLE
        assert angle_lp_criterion(system).outcome == INAPPLICABLE


class TestAngleLP:
    """Test the angle LP and its certificates."""

    @pytest.mark.parametrize("mode", [LEMMA, PAPER])
    def test_pentagon_bridge_rejected(self, drawn, mode):
        """The LP refutes the drawn outer face where the local rule cannot."""
        face_set, choice = drawn("pentagon-bridge")
        verdict = angle_lp_criterion(build_angle_system(face_set, choice), mode)

        assert verdict.criterion == ANGLE_LP
        assert verdict.outcome == REJECT
        assert verdict.witness["status"] in (INFEASIBLE, OPTIMAL)
        assert verdict.witness["bound_mode"] == mode
        assert verdict.witness["verified"] is True
        assert verdict.witness["certificate"]

    def test_certificate_checks_out(self, drawn):
        face_set, choice = drawn("pentagon-bridge")
        lp = build_angle_lp(build_angle_system(face_set, choice), LEMMA)
        outcome = simplex_solve(lp)
        verify(lp, outcome)
        assert outcome.status == INFEASIBLE or outcome.objective_value <= 0

    def test_bound_modes(self, drawn):
        """Neighbouring pentagon corners are bounded by 1/2 or by 1."""
        face_set, choice = drawn("pentagon-bridge")
        system = build_angle_system(face_set, choice)
        for mode, bound in ((LEMMA, Fraction(1, 2)), (PAPER, Fraction(1))):
            rows = build_angle_lp(system, mode).constraints
            pairs = [c for c in rows if c.name.startswith("pair_")]
            assert len(pairs) == 5
            assert {c.rhs for c in pairs} == {bound}

    def test_variables_named_by_corner(self, drawn):
        face_set, choice = drawn("square")
        lp = build_angle_lp(build_angle_system(face_set, choice))
        assert lp.variables[-1] == "y"
        assert all(name.startswith("x") and "_v" in name for name in lp.variables[:-1])
        assert len(lp.variables) == 9

    def test_square_feasible(self, drawn):
        face_set, choice = drawn("square")
        verdict = angle_lp_criterion(build_angle_system(face_set, choice))
        assert verdict.outcome == PASS
        assert "certificate" not in verdict.witness

    def test_unknown_bound_mode(self, drawn):
        face_set, choice = drawn("square")
        with pytest.raises(ValueError, match="bound mode"):
            build_angle_lp(build_angle_system(face_set, choice), "tight")

    def test_dump(self, drawn, tmp_path):
        face_set, choice = drawn("square")
        path = tmp_path / "lp" / "square.lp"
        angle_lp_criterion(build_angle_system(face_set, choice), LEMMA, str(path))
        text = path.read_text()
        assert text.startswith("max:") or "max:" in text
        assert "around_0" in text


def test_local_rejection_implies_lp_rejection():
    """Whatever the local rule refutes, the LP refutes too."""
    for name in FIXTURE_NAMES:
        face_set = trace_faces(load_fixture(name))
        for f in range(face_set.face_count):
            system = build_angle_system(face_set, outer_face_choice(face_set, f))
            if local_angle_criterion(system).outcome == REJECT:
                for mode in (LEMMA, PAPER):
                    assert angle_lp_criterion(system, mode).outcome == REJECT, (name, f, mode)
