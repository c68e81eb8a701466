"""Tests for configuration module."""

import pytest

from src.config import Config, parse_criteria
from src.criteria import ANGLE_LP, AREA, CRITERIA, LOCAL_ANGLE, TRIANGLE_CHAIN


class TestConfig:
    """Test configuration loading."""

    def test_default_values(self, monkeypatch):
        """Test default configuration values."""
        for name in ("MATCHSTICK_JOBS", "MATCHSTICK_LP_BOUND", "MATCHSTICK_CRITERIA"):
            monkeypatch.delenv(name, raising=False)
        config = Config()
        assert config.jobs == 1
        assert config.lp_bound == "lemma"
        assert config.criteria_names == CRITERIA
        assert config.short_circuit is True
        assert config.reorder_buffer == 64
        assert config.log_file is None

    def test_validation_valid(self, config):
        """Test validation with valid config."""
        is_valid, error = config.validate()
        assert is_valid is True
        assert error is None

    def test_validation_invalid_bound(self, config):
        """Test validation with an unknown LP bound mode."""
        config.lp_bound = "tight"
        is_valid, error = config.validate()
        assert is_valid is False
        assert error is not None and "MATCHSTICK_LP_BOUND" in error

    def test_validation_invalid_jobs(self, config):
        """Test validation with zero workers."""
        config.jobs = 0
        is_valid, error = config.validate()
        assert is_valid is False
        assert "MATCHSTICK_JOBS" in error

    def test_validation_invalid_criteria(self, config):
        """Test validation with an unknown criterion."""
        config.criteria = "area,magic"
        is_valid, error = config.validate()
        assert is_valid is False
        assert "MATCHSTICK_CRITERIA" in error

    def test_repr(self, config):
        """Test string representation."""
        assert "lp_bound=lemma" in repr(config)


class TestConfigEnvOverrides:
    """Test environment variable overrides."""

    def test_jobs_override(self, monkeypatch):
        """Test MATCHSTICK_JOBS override."""
        monkeypatch.setenv("MATCHSTICK_JOBS", "4")
        assert Config().jobs == 4

    def test_short_circuit_override(self, monkeypatch):
        """Test MATCHSTICK_SHORT_CIRCUIT override."""
        monkeypatch.setenv("MATCHSTICK_SHORT_CIRCUIT", "no")
        assert Config().short_circuit is False

    def test_log_level_is_upper_cased(self, monkeypatch):
        """Test MATCHSTICK_LOG_LEVEL normalisation."""
        monkeypatch.setenv("MATCHSTICK_LOG_LEVEL", "debug")
        config = Config()
        assert config.log_level == "DEBUG"
        assert config.validate() == (True, None)


class TestParseCriteria:
    """Test criterion list parsing."""

    def test_aliases_resolve_in_fixed_order(self):
        """Aliases map to full names and come back in evaluation order."""
        assert parse_criteria("lp, area") == (AREA, ANGLE_LP)
        assert parse_criteria("chain,local,chain") == (TRIANGLE_CHAIN, LOCAL_ANGLE)

    def test_full_names_accepted(self):
        """Full criterion names work as well as aliases."""
        assert parse_criteria("angle_lp") == (ANGLE_LP,)

    def test_empty_and_unknown_rejected(self):
        """An empty list or unknown name is an error."""
        with pytest.raises(ValueError):
            parse_criteria(" , ")
        with pytest.raises(ValueError, match="unknown criterion"):
            parse_criteria("area,volume")
