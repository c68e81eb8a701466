"""Pytest configuration and fixtures."""

import pytest

from src.pipeline.fixtures import depicted_outer_face, load_fixture
from src.planar import PlanarEmbedding, outer_face_choice, trace_faces


@pytest.fixture(autouse=True)
def test_env(monkeypatch):
    """Set test environment variables."""
    monkeypatch.setenv("MATCHSTICK_JOBS", "1")
    monkeypatch.setenv("MATCHSTICK_LP_BOUND", "lemma")
    monkeypatch.setenv("MATCHSTICK_CRITERIA", "area,chain,local,lp")
    monkeypatch.setenv("MATCHSTICK_SHORT_CIRCUIT", "true")
    monkeypatch.setenv("MATCHSTICK_LOG_LEVEL", "WARNING")
    monkeypatch.delenv("MATCHSTICK_LOG_FILE", raising=False)
    monkeypatch.delenv("MATCHSTICK_LP_DUMP_DIR", raising=False)
    monkeypatch.delenv("MATCHSTICK_REORDER_BUFFER", raising=False)


@pytest.fixture
def config():
    """Create a test configuration."""
    from src.config import Config
    return Config()


@pytest.fixture
def square() -> PlanarEmbedding:
    """The 4-cycle, clockwise."""
    return PlanarEmbedding.from_rotation([[1, 3], [2, 0], [3, 1], [0, 2]], name="square")


@pytest.fixture
def k4() -> PlanarEmbedding:
    return load_fixture("k4")


@pytest.fixture
def drawn():
    """Faces and the drawn outer-face choice of a named fixture."""

    def make(name: str):
        face_set = trace_faces(load_fixture(name))
        return face_set, outer_face_choice(face_set, depicted_outer_face(name))

    return make
