"""Configuration management for the sheaf cohomology toolkit."""

from .settings import Settings
from .run_config import RunConfig
from .constants import DEFAULT_FIELD, DEFAULT_MAX_DEGREE, SERVER_NAME, SERVER_VERSION

__all__ = ["Settings", "RunConfig", "DEFAULT_FIELD", "DEFAULT_MAX_DEGREE", "SERVER_NAME", "SERVER_VERSION"]
