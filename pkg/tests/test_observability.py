"""Tests for logging setup."""

import logging

from src.config import Config
from src.observability import LoggingManager, setup_logging


def tagged_handlers():
    return [h for h in logging.getLogger().handlers if getattr(h, "_matchstick", False)]


class TestLoggingManager:
    """Test logging configuration."""

    def test_stream_only(self, config):
        manager = setup_logging(config)
        assert manager.is_active()
        assert manager.file_handler is None
        assert len(tagged_handlers()) == 1
        assert logging.getLogger().level == logging.WARNING

    def test_log_file(self, monkeypatch, tmp_path):
        path = tmp_path / "run.log"
        monkeypatch.setenv("MATCHSTICK_LOG_FILE", str(path))
        monkeypatch.setenv("MATCHSTICK_LOG_LEVEL", "info")
        manager = LoggingManager(Config())
        assert manager.setup() is True
        logging.getLogger("src.test").info("hello")
        manager.file_handler.flush()
        assert "hello" in path.read_text()

    def test_setup_is_idempotent(self, config):
        setup_logging(config)
        setup_logging(config)
        assert len(tagged_handlers()) == 1
