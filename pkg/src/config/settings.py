"""Configuration settings management for the MCP server."""

import os
from typing import Optional
from dotenv import load_dotenv

from ..linalg import FieldSpec
from ..utils.errors import ConfigurationError, InputError
from .constants import DEFAULT_FIELD, DEFAULT_MAX_DEGREE, DEFAULT_SEED

# Load environment variables from .env file
load_dotenv()


class Settings:
    """Server defaults read from the environment (SHEAF_* variables)."""

    def __init__(self):
        """Initialize settings from the environment."""
        self._field: Optional[str] = None
        self._log_level: Optional[str] = None
        self._max_degree: Optional[str] = None
        self._corpus_seed: Optional[str] = None
        self._load_env_vars()

    def _load_env_vars(self) -> None:
        """Load and cache environment variables."""
        self._field = os.getenv('SHEAF_FIELD')
        self._log_level = os.getenv('SHEAF_LOG_LEVEL')
        self._max_degree = os.getenv('SHEAF_MAX_DEGREE')
        self._corpus_seed = os.getenv('SHEAF_CORPUS_SEED')

    @property
    def field(self) -> FieldSpec:
        """Default coefficient field."""
        try:
            return FieldSpec.parse(self._field or DEFAULT_FIELD)
        except InputError as e:
            raise ConfigurationError(f"SHEAF_FIELD is invalid: {e.message}")

    @property
    def log_level(self) -> str:
        level = (self._log_level or "INFO").upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigurationError(f"SHEAF_LOG_LEVEL must be a logging level, got {self._log_level!r}")
        return level

    @property
    def max_degree(self) -> Optional[int]:
        """Explicit degree bound, or None to let each pipeline pick its default."""
        if self._max_degree is None:
            return None
        return self._positive_int(self._max_degree, DEFAULT_MAX_DEGREE, "SHEAF_MAX_DEGREE", minimum=1)

    @property
    def corpus_seed(self) -> int:
        return self._positive_int(self._corpus_seed, DEFAULT_SEED, "SHEAF_CORPUS_SEED", minimum=0)

    @staticmethod
    def _positive_int(raw: Optional[str], default: int, name: str, minimum: int) -> int:
        if raw is None:
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
        if value < minimum:
            raise ConfigurationError(f"{name} must be at least {minimum}, got {value}")
        return value

    def get_debug_info(self) -> dict:
        """Get debug information about configuration state."""
        return {
            "env_file_exists": os.path.exists('.env'),
            "variables": {
                "SHEAF_FIELD": self._field if self._field else "[NOT SET]",
                "SHEAF_LOG_LEVEL": self._log_level if self._log_level else "[NOT SET]",
                "SHEAF_MAX_DEGREE": self._max_degree if self._max_degree else "[NOT SET]",
                "SHEAF_CORPUS_SEED": self._corpus_seed if self._corpus_seed else "[NOT SET]",
            },
        }
