"""Logging configuration for the sheaf cohomology toolkit."""

import logging
import sys
from typing import Optional

APP_LOGGER_NAME = "sheaf_toolkit"
DEFAULT_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class StderrHandler(logging.StreamHandler):
    """Writes to whatever sys.stderr is at emit time, so swapped streams are honoured."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logging(level: str = "INFO", log_format: Optional[str] = None) -> logging.Logger:
    """
    Configure the application logger.

    Records go to stderr; stdout is reserved for command output. Calling again replaces
    the handler and level, so each CLI invocation or server start gets its own setup.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_format: Custom log format string

    Returns:
        Configured application logger
    """
    numeric = getattr(logging, level.upper())
    handler = StderrHandler()
    handler.setFormatter(logging.Formatter(log_format or DEFAULT_FORMAT))

    logger = logging.getLogger(APP_LOGGER_NAME)
    for old in list(logger.handlers):
        logger.removeHandler(old)
    logger.addHandler(handler)
    logger.setLevel(numeric)
    logger.propagate = False
    return logger


def get_logger(name: str) -> logging.Logger:
    """Logger for one module, below the application logger."""
    return logging.getLogger(f"{APP_LOGGER_NAME}.{name}")
