"""Application configuration module."""

import os
from typing import Optional, Tuple

from dotenv import load_dotenv

from .criteria.angles import BOUND_MODES
from .criteria.verdict import CRITERIA, CRITERION_ALIASES

# Load environment variables from .env file
load_dotenv()

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def parse_criteria(value: str) -> Tuple[str, ...]:
    """Resolve a comma list of criterion names or aliases.

    Raises:
        ValueError: If a name is unknown or the list is empty.
    """
    names = []
    for token in (t.strip().lower() for t in value.split(",")):
        if not token:
            continue
        name = CRITERION_ALIASES.get(token, token)
        if name not in CRITERIA:
            raise ValueError(
                f"unknown criterion {token!r}; choose from {', '.join(CRITERION_ALIASES)}"
            )
        names.append(name)
    if not names:
        raise ValueError("at least one criterion is required")
    return tuple(sorted(set(names), key=CRITERIA.index))


class Config:
    """Application configuration loaded from environment variables."""

    def __init__(self):
        """Initialize configuration from environment variables."""
        # Filter settings
        self.jobs: int = int(os.getenv("MATCHSTICK_JOBS", "1"))
        self.lp_bound: str = os.getenv("MATCHSTICK_LP_BOUND", "lemma").lower()
        self.criteria: str = os.getenv("MATCHSTICK_CRITERIA", "area,chain,local,lp")
        self.short_circuit: bool = os.getenv("MATCHSTICK_SHORT_CIRCUIT", "true").lower() in (
            "true",
            "1",
            "yes",
        )
        self.reorder_buffer: int = int(os.getenv("MATCHSTICK_REORDER_BUFFER", "64"))

        # Logging
        self.log_level: str = os.getenv("MATCHSTICK_LOG_LEVEL", "WARNING").upper()
        self.log_file: Optional[str] = os.getenv("MATCHSTICK_LOG_FILE") or None

        # Debug output
        self.lp_dump_dir: Optional[str] = os.getenv("MATCHSTICK_LP_DUMP_DIR") or None

    @property
    def criteria_names(self) -> Tuple[str, ...]:
        return parse_criteria(self.criteria)

    def validate(self) -> Tuple[bool, Optional[str]]:
        """Validate configuration values.

        Returns:
            Tuple of (is_valid, error_message).
        """
        if self.jobs < 1:
            return False, "MATCHSTICK_JOBS must be positive"

        if self.lp_bound not in BOUND_MODES:
            return (
                False,
                f"MATCHSTICK_LP_BOUND must be one of {', '.join(BOUND_MODES)}, "
                f"got '{self.lp_bound}'",
            )

        try:
            self.criteria_names
        except ValueError as e:
            return False, f"MATCHSTICK_CRITERIA: {e}"

        if self.reorder_buffer < 1:
            return False, "MATCHSTICK_REORDER_BUFFER must be positive"

        if self.log_level not in LOG_LEVELS:
            return False, f"MATCHSTICK_LOG_LEVEL must be one of {', '.join(LOG_LEVELS)}"

        return True, None

    def __repr__(self) -> str:
        """String representation of config."""
        return (
            f"Config(jobs={self.jobs}, "
            f"lp_bound={self.lp_bound}, "
            f"criteria={self.criteria}, "
            f"short_circuit={self.short_circuit})"
        )
