"""Utility modules for the sheaf cohomology toolkit."""

from .errors import (
    SheafToolkitError,
    ConfigurationError,
    InputError,
    ValidationError,
    CheckFailure,
    StabilizationError,
)
from .logging import setup_logging, get_logger

__all__ = [
    "SheafToolkitError",
    "ConfigurationError",
    "InputError",
    "ValidationError",
    "CheckFailure",
    "StabilizationError",
    "setup_logging",
    "get_logger",
]
