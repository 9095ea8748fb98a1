"""
Abstract interfaces for scgkit components.

The logger is injected through a Protocol (structural subtyping), so
that tests can pass simple mocks and callers can plug in their own
logging backends.

Example:
    >>> class PrintLogger:
    ...     def debug(self, msg, prefix=""): print(f"DEBUG: {msg}")
    ...     def info(self, msg, prefix=""): print(f"INFO: {msg}")
    ...     def warning(self, msg, prefix=""): print(f"WARN: {msg}")
    ...     def error(self, msg, prefix=""): print(f"ERROR: {msg}")
    ...     def success(self, msg, prefix=""): print(f"OK: {msg}")
    ...     def minimal(self, msg): print(msg)
    ...     def section(self, title): print(f"=== {title} ===")
    ...     def subsection(self, title): print(f"--- {title} ---")
    >>>
    >>> beats = delineate(scg, ppg, logger=PrintLogger())
"""
from __future__ import annotations

from typing import Protocol, runtime_checkable


# ============================================================
# Logger Protocol
# ============================================================

@runtime_checkable
class LoggerProtocol(Protocol):
    """
    Protocol for logging.

    Any object with these methods can be used as a logger,
    including PipelineLogger or a thin wrapper over logging.Logger.
    """

    def debug(self, msg: str) -> None:
        ...

    def info(self, msg: str, prefix: str = "") -> None:
        ...

    def warning(self, msg: str) -> None:
        ...

    def error(self, msg: str) -> None:
        ...

    def success(self, msg: str) -> None:
        ...

    def minimal(self, msg: str) -> None:
        ...

    def section(self, title: str) -> None:
        ...

    def subsection(self, title: str) -> None:
        ...
