"""
Verbosity-filtered logging for the delineation and analysis pipelines.

Messages go to a standard ``logging.Logger`` (by default "scgkit",
writing plain lines to stderr so that reports printed on stdout stay
machine-readable). Three pipeline verbosities filter them:

    minimal  warnings, errors and one summary line per run
    info     one line per record, window batch and stage
    debug    per-window details: candidate counts, thresholds, bins

A logger bound to a record name starts every line with ``[name]``, so
the output of several records stays attributable.
"""

from enum import Enum
from typing import Any, Optional, Union
import logging
import sys

from ..core.errors import ConfigurationError


class LogLevel(str, Enum):
    """Pipeline verbosity, quietest first."""
    MINIMAL = "minimal"
    INFO = "info"
    DEBUG = "debug"

    @property
    def rank(self) -> int:
        return _RANK[self]

    @classmethod
    def parse(cls, name: Union["LogLevel", str]) -> "LogLevel":
        """
        Level from its name, case-insensitive.

        Raises:
            ConfigurationError: For an unknown name (field ``log_level``)
        """
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            choices = ", ".join(level.value for level in cls)
            raise ConfigurationError(
                f"expected one of {choices}", field="log_level", value=name
            ) from None


_RANK = {LogLevel.MINIMAL: 0, LogLevel.INFO: 1, LogLevel.DEBUG: 2}


def _stderr_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    # configure once per process
    if not logger.handlers:
        logger.setLevel(logging.DEBUG)
        handler = logging.StreamHandler(sys.stderr)
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    return logger


class PipelineLogger:
    """
    Logger with pipeline verbosity levels.

    Args:
        level: LogLevel or its name
        logger: Backend ``logging.Logger`` (or any object with debug, info,
            warning and error methods); default: a stderr logger
        name: Name of the default backend logger
        record: Record name prefixed to every line

    Example:
        >>> logger = PipelineLogger.from_name("debug").for_record("s01a")
        >>> logger.warning("Window 3: no AO detected")
        [s01a] Window 3: no AO detected
    """

    def __init__(
        self,
        level: Union[LogLevel, str] = LogLevel.INFO,
        logger: Optional[Any] = None,
        name: str = "scgkit",
        record: Optional[str] = None,
    ):
        self.level = LogLevel.parse(level)
        self.record = record
        self._logger = logger if logger is not None else _stderr_logger(name)

    @classmethod
    def from_name(cls, level_name: str, **kwargs) -> "PipelineLogger":
        """Create a logger from a level name such as "info"."""
        return cls(level=LogLevel.parse(level_name), **kwargs)

    def for_record(self, record: str) -> "PipelineLogger":
        """Same level and backend, with ``record`` prefixed to every line."""
        return PipelineLogger(self.level, self._logger, record=record)

    def enabled(self, level: LogLevel) -> bool:
        return self.level.rank >= level.rank

    def _line(self, message: str, tag: str = "") -> str:
        head = f"[{self.record}] " if self.record else ""
        return f"{head}{tag} {message}" if tag else f"{head}{message}"

    def minimal(self, message: str):
        """Run summaries, shown at every level."""
        self._logger.info(self._line(message))

    def info(self, message: str, prefix: str = ""):
        if self.enabled(LogLevel.INFO):
            self._logger.info(self._line(message, prefix))

    def debug(self, message: str):
        if self.enabled(LogLevel.DEBUG):
            self._logger.debug(self._line(message, "[DEBUG]"))

    def success(self, message: str):
        if self.enabled(LogLevel.INFO):
            self._logger.info(self._line(message))

    def warning(self, message: str):
        self._logger.warning(self._line(message))

    def error(self, message: str):
        self._logger.error(self._line(message))

    def section(self, title: str):
        if self.enabled(LogLevel.INFO):
            rule = "=" * 60
            self._logger.info(f"\n{rule}\n{self._line(title)}\n{rule}")

    def subsection(self, title: str):
        if self.enabled(LogLevel.DEBUG):
            self._logger.debug(f"\n{self._line(title)}\n{'-' * 40}")
