"""Logging setup for the command-line tools."""

import logging
from typing import Optional

from .config import Config

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class LoggingManager:
    """Configure the root logger once per process."""

    def __init__(self, config: Config):
        """Initialize logging manager.

        Args:
            config: Application configuration.
        """
        self.config = config
        self.file_handler: Optional[logging.FileHandler] = None
        self._configured = False

    def setup(self) -> bool:
        """Attach a stderr handler and, if configured, a log file handler.

        Returns:
            True if a file handler was attached.
        """
        root = logging.getLogger()
        root.setLevel(getattr(logging, self.config.log_level, logging.WARNING))
        for handler in list(root.handlers):
            if getattr(handler, "_matchstick", False):
                root.removeHandler(handler)
                handler.close()

        stream = logging.StreamHandler()
        stream.setFormatter(logging.Formatter(LOG_FORMAT))
        stream._matchstick = True  # type: ignore[attr-defined]
        root.addHandler(stream)

        if self.config.log_file:
            try:
                self.file_handler = logging.FileHandler(self.config.log_file)
            except OSError as e:
                logger.warning(f"cannot open log file {self.config.log_file}: {e}")
            else:
                self.file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
                self.file_handler._matchstick = True  # type: ignore[attr-defined]
                root.addHandler(self.file_handler)

        self._configured = True
        logger.debug(f"logging configured: {self.config!r}")
        return self.file_handler is not None

    def is_active(self) -> bool:
        return self._configured


def setup_logging(config: Config) -> LoggingManager:
    """Configure logging from ``config`` and return the manager."""
    manager = LoggingManager(config)
    manager.setup()
    return manager
