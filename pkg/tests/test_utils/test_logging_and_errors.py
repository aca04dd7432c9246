"""Tests for logging setup and the error hierarchy."""

import logging

from src.utils.errors import CheckFailure, InputError, StabilizationError, ValidationError
from src.utils.logging import get_logger, setup_logging


def test_records_go_to_the_current_stderr(capsys):
    setup_logging("INFO")
    get_logger("tests").info("hello from the toolkit")
    captured = capsys.readouterr()
    assert "hello from the toolkit" in captured.err
    assert captured.out == ""


def test_setup_replaces_the_previous_handler():
    setup_logging("INFO")
    logger = setup_logging("DEBUG")
    assert logger.level == logging.DEBUG
    assert len(logger.handlers) == 1


def test_error_payloads():
    error = InputError("Malformed JSON in input: Expecting value", line=3, column=7)
    assert error.to_dict() == {
        "error_code": "INPUT_ERROR",
        "message": "Malformed JSON in input: Expecting value",
        "line": 3,
        "column": 7,
    }
    assert ValidationError("bad").to_dict()["error_code"] == "VALIDATION_ERROR"
    failure = StabilizationError("not stable", {"dims": [1, 0]})
    assert isinstance(failure, CheckFailure)
    assert failure.to_dict()["witness"] == {"dims": [1, 0]}
    assert failure.error_code == "NOT_STABILIZED"
