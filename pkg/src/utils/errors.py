"""Custom exception classes for the sheaf cohomology toolkit."""

from typing import Any, Optional


class SheafToolkitError(Exception):
    """Base exception for sheaf toolkit errors."""

    def __init__(self, message: str, error_code: str = None):
        super().__init__(message)
        self.error_code = error_code
        self.message = message

    def to_dict(self) -> dict:
        """Serializable form used by the CLI and the MCP tools."""
        return {"error_code": self.error_code, "message": self.message}


class ConfigurationError(SheafToolkitError):
    """Raised when configuration is invalid or missing."""

    def __init__(self, message: str):
        super().__init__(message, "CONFIG_ERROR")


class InputError(SheafToolkitError):
    """Raised when an input document or argument is malformed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 error_code: str = "INPUT_ERROR"):
        super().__init__(message, error_code)
        self.line = line
        self.column = column

    def to_dict(self) -> dict:
        data = super().to_dict()
        if self.line is not None:
            data["line"] = self.line
            data["column"] = self.column
        return data


class CheckFailure(SheafToolkitError):
    """Raised when a theorem or invariant check fails on a concrete instance."""

    def __init__(self, message: str, witness: Any = None, error_code: str = "CHECK_FAILED"):
        super().__init__(message, error_code)
        self.witness = witness

    def to_dict(self) -> dict:
        data = super().to_dict()
        data["witness"] = self.witness
        return data


class StabilizationError(CheckFailure):
    """Raised when a truncated complex shows no evidence of vanishing cohomology."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message, witness, "NOT_STABILIZED")


class ValidationError(InputError):
    """Raised when a parsed value violates a structural invariant."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        super().__init__(message, line, column, "VALIDATION_ERROR")
