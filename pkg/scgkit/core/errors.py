"""
Custom exceptions for scgkit.

This module provides a hierarchy of exceptions for the error conditions
raised by the signal-processing, delineation, analysis and CLI layers.

Exception Hierarchy:
    ScgKitError (base)
    ├── ParameterError - Invalid parameter value (cutoff, band, scale, ...)
    ├── InputError - Signal or record violates a precondition
    │   └── DegenerateInputError - Normalization or statistic undefined
    ├── ConfigurationError - Invalid configuration file or override
    ├── ParseError - Malformed record CSV or annotation JSON
    └── TrainingError - Classifier could not be fitted

Every exception carries an ``exit_code`` used by the command-line surface:
2 for parse/configuration errors, 3 for precondition errors and 4 for
degenerate input.

Example:
    >>> from scgkit.core.errors import ParameterError
    >>>
    >>> try:
    ...     bandpass(signal, 30.0, 20.0, 4)
    ... except ParameterError as e:
    ...     print(e.to_dict())
"""
from typing import Any, Dict, Optional


class ScgKitError(Exception):
    """
    Base exception for all scgkit errors.

    All custom exceptions inherit from this class, allowing callers to
    catch every library error with a single except block.
    """

    exit_code: int = 1

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "error": type(self).__name__,
            "message": str(self),
            "exit_code": self.exit_code,
        }


class ParameterError(ScgKitError):
    """
    Raised when a numeric parameter is outside its valid range.

    Attributes:
        parameter: Name of the offending parameter
        value: The invalid value
        constraint: Human-readable description of the valid range

    Example:
        >>> raise ParameterError(
        ...     parameter="cutoff_hz",
        ...     value=600.0,
        ...     constraint="0 < cutoff_hz < fs/2 (500.0)",
        ... )
    """

    exit_code = 3

    def __init__(self, parameter: str, value: Any, constraint: Optional[str] = None):
        self.parameter = parameter
        self.value = value
        self.constraint = constraint

        message = f"Invalid parameter {parameter}={value!r}"
        if constraint:
            message += f" (expected {constraint})"

        super().__init__(message)

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["parameter"] = self.parameter
        result["value"] = repr(self.value)
        result["constraint"] = self.constraint
        return result


class InputError(ScgKitError):
    """
    Raised when a signal or record violates a precondition.

    Attributes:
        message: Description of the violated precondition
        label: Channel label of the signal involved (if known)
    """

    exit_code = 3

    def __init__(self, message: str, label: Optional[str] = None):
        self.label = label

        full_message = f"Input error: {message}"
        if label:
            full_message = f"Input error on '{label}': {message}"

        super().__init__(full_message)

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["label"] = self.label
        return result


class DegenerateInputError(InputError):
    """
    Raised when an input makes a normalization undefined.

    Examples are an all-equal signal under min-max scaling or an all-zero
    coefficient matrix passed to the scalogram.
    """

    exit_code = 4


class ConfigurationError(ScgKitError):
    """
    Raised when configuration is invalid.

    Attributes:
        message: Description of the configuration error
        field: The configuration field that caused the error (if applicable)
        value: The invalid value (if applicable)

    Example:
        >>> raise ConfigurationError(
        ...     message="must be a positive number",
        ...     field="window_s",
        ...     value=-1,
        ... )
    """

    exit_code = 2

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None,
    ):
        self.field = field
        self.value = value

        full_message = f"Configuration error: {message}"
        if field:
            full_message += f" (field: {field})"
        if value is not None:
            full_message += f" (value: {value!r})"

        super().__init__(full_message)

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["field"] = self.field
        result["value"] = repr(self.value) if self.value is not None else None
        return result


class ParseError(ScgKitError):
    """
    Raised when a record or annotation file is malformed.

    Attributes:
        message: Description of the problem
        path: File being parsed
        line: 1-based line number of the offending row (if applicable)

    Example:
        >>> raise ParseError("expected 3 columns, got 2", path="rec.csv", line=17)
    """

    exit_code = 2

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line

        location = ""
        if path:
            location = f" in {path}"
        if line is not None:
            location += f" at line {line}"

        super().__init__(f"Parse error{location}: {message}")

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["path"] = self.path
        result["line"] = self.line
        return result


class TrainingError(ScgKitError):
    """
    Raised when a classifier cannot be trained.

    Attributes:
        kind: Classifier kind (e.g. "lda", "svm-rbf")
        message: Description of the failure
    """

    exit_code = 3

    def __init__(self, message: str, kind: Optional[str] = None):
        self.kind = kind

        full_message = f"Training error: {message}"
        if kind:
            full_message = f"Training error [{kind}]: {message}"

        super().__init__(full_message)

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["kind"] = self.kind
        return result
