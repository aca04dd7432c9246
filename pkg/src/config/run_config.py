"""Validated run configuration shared by every CLI subcommand."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..linalg import FieldSpec
from ..utils.errors import InputError
from .constants import DEFAULT_FIELD, DEFAULT_SEED

SEED_LIMIT = 2 ** 64


class RunConfig(BaseModel):
    """Flags of one invocation; validated before any computation starts."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: str
    input_path: Optional[str] = None
    field: str = DEFAULT_FIELD
    max_degree: Optional[int] = Field(default=None, ge=1)
    mode: Literal["full", "alt"] = "alt"
    output_format: Literal["json", "table"] = "json"
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=SEED_LIMIT)
    self_test: bool = False
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: str) -> str:
        try:
            FieldSpec.parse(value)
        except InputError as e:
            raise ValueError(e.message)
        return value

    @field_validator("log_level", mode="before")
    @classmethod
    def _upper_level(cls, value):
        return value.upper() if isinstance(value, str) else value

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    @property
    def cech_mode(self) -> str:
        """Čech mode name: 'full' or 'alternating'."""
        return "full" if self.mode == "full" else "alternating"

    @property
    def nerve_mode(self) -> str:
        return "full" if self.mode == "full" else "nondegenerate"
