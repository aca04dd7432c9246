"""Tests for environment settings and the validated run configuration."""

import pydantic
import pytest

from src.config.run_config import RunConfig
from src.config.settings import Settings
from src.utils.errors import ConfigurationError


def test_defaults(clean_env):
    settings = Settings()
    assert settings.field.label == "rat"
    assert settings.log_level == "INFO"
    assert settings.max_degree is None
    assert settings.corpus_seed == 0


def test_values_from_the_environment(clean_env, monkeypatch):
    monkeypatch.setenv("SHEAF_FIELD", "fp:7")
    monkeypatch.setenv("SHEAF_LOG_LEVEL", "debug")
    monkeypatch.setenv("SHEAF_MAX_DEGREE", "5")
    monkeypatch.setenv("SHEAF_CORPUS_SEED", "11")
    settings = Settings()
    assert settings.field.label == "fp:7"
    assert settings.log_level == "DEBUG"
    assert settings.max_degree == 5
    assert settings.corpus_seed == 11


@pytest.mark.parametrize("name, value, prop", [
    ("SHEAF_FIELD", "fp:8", "field"),
    ("SHEAF_LOG_LEVEL", "chatty", "log_level"),
    ("SHEAF_MAX_DEGREE", "zero", "max_degree"),
    ("SHEAF_MAX_DEGREE", "0", "max_degree"),
    ("SHEAF_CORPUS_SEED", "-1", "corpus_seed"),
])
def test_invalid_values(clean_env, monkeypatch, name, value, prop):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigurationError):
        getattr(Settings(), prop)


def test_debug_info_masks_nothing_but_reports_unset(clean_env, monkeypatch):
    monkeypatch.setenv("SHEAF_FIELD", "fp:5")
    info = Settings().get_debug_info()
    assert info["variables"]["SHEAF_FIELD"] == "fp:5"
    assert info["variables"]["SHEAF_MAX_DEGREE"] == "[NOT SET]"


def test_run_config_modes():
    config = RunConfig(command="cech")
    assert config.cech_mode == "alternating"
    assert config.nerve_mode == "nondegenerate"
    full = RunConfig(command="cech", mode="full", field="fp:3", log_level="info")
    assert full.cech_mode == full.nerve_mode == "full"
    assert full.field_spec.label == "fp:3"
    assert full.log_level == "INFO"


@pytest.mark.parametrize("kwargs", [
    {"field": "fp:9"},
    {"max_degree": 0},
    {"seed": -1},
    {"mode": "sideways"},
    {"unexpected": True},
])
def test_run_config_rejects(kwargs):
    with pytest.raises(pydantic.ValidationError):
        RunConfig(command="euler", **kwargs)
