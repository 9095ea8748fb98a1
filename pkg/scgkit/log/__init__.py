"""
scgkit Logging Module.

This module provides structured logging for the delineation and
analysis pipelines.

Components:
    - PipelineLogger: Main logger with configurable verbosity
    - LogLevel: Logging verbosity levels (MINIMAL, INFO, DEBUG)

Example:
    >>> from scgkit.log import PipelineLogger, LogLevel
    >>> logger = PipelineLogger(level=LogLevel.DEBUG)
    >>> logger.info("Delineating record s01a...")
"""

from .logger import PipelineLogger, LogLevel

__all__ = [
    "PipelineLogger",
    "LogLevel",
]
