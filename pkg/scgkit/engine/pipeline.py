"""
Delineation pipeline with pluggable stages.

This module provides the DelineationPipeline class that runs the
per-window delineation through pluggable stage handlers.

Pipeline Stages:
    1. PPG Peaks - Detrend both channels and find systolic PPG apices
    2. Diastole - Locate pAC and the decision-rule minima AC and MO
    3. Masking - Zero every diastole (with guard bands)
    4. Systole - Detect AO in the masked SCG, then IM and IC; pair beats

Example:
    >>> pipeline = DelineationPipeline([
    ...     PpgPeakStage(),
    ...     DiastoleStage(),
    ...     MaskingStage(),
    ...     SystoleStage(),
    ... ])
    >>> context = DelineationContext(scg=scg, ppg=ppg, config=config)
    >>> completed, reason = pipeline.run(context)
"""

from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from .context import DelineationContext
from ..core.events import EventEmitter, DelineationStage, EventStatus
from ..core.interfaces import LoggerProtocol


class PipelineStage(ABC):
    """
    Abstract base class for delineation pipeline stages.

    Each stage implements the execute() method which receives the
    delineation context and reports whether later stages should run.

    Attributes:
        name: Human-readable stage name
        stage_type: DelineationStage enum value
        logger: Logger instance for output
        event_emitter: Event emitter for progress tracking

    Example:
        >>> class MyStage(PipelineStage):
        ...     def execute(self, context):
        ...         if nothing_found:
        ...             return False, "Nothing to delineate"
        ...         return True, None
    """

    def __init__(
        self,
        name: str,
        stage_type: DelineationStage,
        logger: Optional[LoggerProtocol] = None,
        event_emitter: Optional[EventEmitter] = None,
    ):
        self.name = name
        self.stage_type = stage_type
        self.logger = logger
        self.event_emitter = event_emitter

    @abstractmethod
    def execute(self, context: DelineationContext) -> Tuple[bool, Optional[str]]:
        """
        Execute this pipeline stage.

        Args:
            context: DelineationContext with the window data and state

        Returns:
            Tuple of (proceed: bool, reason: Optional[str])
            - (True, None) if later stages should run
            - (False, "reason") if the window yields nothing further
        """
        raise NotImplementedError

    def _emit(self, status: EventStatus, message: str, data: dict = None) -> None:
        if self.event_emitter:
            self.event_emitter.emit(self.stage_type.value, status.value, message, data)

    def emit_started(self, message: str = None) -> None:
        """Emit stage started event."""
        self._emit(EventStatus.STARTED, message or f"Starting {self.name}")

    def emit_passed(self, message: str = None, data: dict = None) -> None:
        """Emit stage passed event."""
        self._emit(EventStatus.PASSED, message or f"{self.name} passed", data)

    def emit_failed(self, message: str, data: dict = None) -> None:
        """Emit stage failed event."""
        self._emit(EventStatus.FAILED, message, data)

    def emit_info(self, message: str, data: dict = None) -> None:
        """Emit info event."""
        self._emit(EventStatus.INFO, message, data)

    def emit_warning(self, message: str, data: dict = None) -> None:
        """Emit warning event."""
        self._emit(EventStatus.WARNING, message, data)


class DelineationPipeline:
    """
    Runs the delineation stages of one window in order.

    The pipeline stops at the first stage that reports nothing left to
    delineate. That outcome is not an error: the window simply contributes
    no (or fewer) beats.

    Attributes:
        stages: List of PipelineStage instances
        logger: Logger instance for output
        event_emitter: Event emitter for progress tracking
    """

    def __init__(
        self,
        stages: List[PipelineStage],
        logger: Optional[LoggerProtocol] = None,
        event_emitter: Optional[EventEmitter] = None,
    ):
        self.stages = stages
        self.logger = logger
        self.event_emitter = event_emitter

        # Inject logger and event emitter into stages
        for stage in self.stages:
            if stage.logger is None:
                stage.logger = logger
            if stage.event_emitter is None:
                stage.event_emitter = event_emitter

    def _emit(self, stage: DelineationStage, status: EventStatus, message: str, data: dict):
        if self.event_emitter:
            return self.event_emitter.emit(stage.value, status.value, message, data)
        return None

    def run(self, context: DelineationContext) -> Tuple[bool, str]:
        """
        Run all pipeline stages on one window.

        Args:
            context: DelineationContext holding the window signals

        Returns:
            Tuple of (completed: bool, reason: str)
        """
        if self.event_emitter:
            self.event_emitter.begin_window(context.window_index)
        event = self._emit(
            DelineationStage.STARTED,
            EventStatus.STARTED,
            f"Delineating window {context.window_index}",
            {"offset": context.offset, "n_samples": len(context.scg)},
        )
        if event is not None:
            context.add_event(event)

        for stage in self.stages:
            if self.logger:
                self.logger.subsection(f"Stage: {stage.name}")

            proceed, reason = stage.execute(context)

            if not proceed:
                context.stop(reason)
                event = self._emit(
                    DelineationStage.COMPLETED,
                    EventStatus.SKIPPED,
                    f"Window {context.window_index} stopped: {reason}",
                    {"stage": stage.name, "reason": reason},
                )
                if event is not None:
                    context.add_event(event)
                return False, reason

        context.finish()
        event = self._emit(
            DelineationStage.COMPLETED,
            EventStatus.PASSED,
            f"Window {context.window_index}: {len(context.beats)} beats",
            {
                "beats": len(context.beats),
                "complete": sum(beat.is_complete for beat in context.beats),
            },
        )
        if event is not None:
            context.add_event(event)
        return True, context.reason
