"""
Window-tagged progress events from the delineation pipeline.

Each window a record is split into runs through the PPG-peak, diastole,
masking and systole stages. Every stage reports STARTED and then PASSED
or FAILED, and the pipeline brackets a window with STARTED and COMPLETED
(or SKIPPED when a stage found nothing to delineate). Every event
carries the index of the window it belongs to.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Union
from enum import Enum
import time


class DelineationStage(Enum):
    """Delineation pipeline stages"""
    STARTED = "started"
    PPG_PEAKS = "ppg_peaks"
    DIASTOLE = "diastole"
    MASKING = "masking"
    SYSTOLE = "systole"
    COMPLETED = "completed"


class EventStatus(Enum):
    """Status of a pipeline event"""
    STARTED = "started"
    PASSED = "passed"
    FAILED = "failed"
    WARNING = "warning"
    SKIPPED = "skipped"
    INFO = "info"


@dataclass
class DelineationEvent:
    """
    One stage report. ``window`` is None for events emitted outside a
    window run.
    """
    stage: str
    status: str
    message: str
    window: Optional[int] = None
    timestamp: float = field(default_factory=time.time)
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization"""
        return {
            "stage": self.stage,
            "status": self.status,
            "message": self.message,
            "window": self.window,
            "timestamp": self.timestamp,
            "details": self.details,
        }


# Type alias for event callbacks
EventCallback = Callable[[DelineationEvent], None]


class EventEmitter:
    """
    Fans pipeline events out to callbacks.

    The emitter keeps no history; consumers that need one register a
    DelineationEventCollector. A callback that raises is reported on
    ``logger`` (when given) and the run carries on.

    Args:
        logger: Receives a warning per failing callback
    """

    def __init__(self, logger: Optional[Any] = None):
        self.logger = logger
        self.window: Optional[int] = None
        self._callbacks: List[EventCallback] = []

    def add_callback(self, callback: EventCallback) -> None:
        """Register an event callback"""
        self._callbacks.append(callback)

    def begin_window(self, index: int) -> None:
        """Tag the following events with window ``index``."""
        self.window = index

    def emit(
        self,
        stage: Union[DelineationStage, str],
        status: Union[EventStatus, str],
        message: str,
        details: Optional[Dict[str, Any]] = None,
    ) -> DelineationEvent:
        """
        Emit a pipeline event to all registered callbacks.

        Args:
            stage: The pipeline stage (from DelineationStage enum or string)
            status: Event status (from EventStatus enum or string)
            message: Human-readable message
            details: Additional structured data

        Returns:
            The emitted DelineationEvent
        """
        event = DelineationEvent(
            stage=stage if isinstance(stage, str) else stage.value,
            status=status if isinstance(status, str) else status.value,
            message=message,
            window=self.window,
            details=details or {},
        )

        for callback in self._callbacks:
            try:
                callback(event)
            except Exception as e:
                if self.logger is not None:
                    self.logger.warning(
                        f"Event callback {getattr(callback, '__name__', callback)!s} "
                        f"failed on {event.stage}/{event.status}: {e}"
                    )

        return event


class DelineationEventCollector:
    """
    Collects pipeline events through a callback.

    Usage:
        collector = DelineationEventCollector()
        delineator = Delineator(event_callback=collector.collect)

        beats = delineator.delineate(scg, ppg)

        per_window = collector.beats_per_window()
    """

    def __init__(self):
        self.events: List[DelineationEvent] = []

    def collect(self, event: DelineationEvent) -> None:
        """Callback to collect events"""
        self.events.append(event)

    def by_stage(self, stage: DelineationStage) -> List[DelineationEvent]:
        return [e for e in self.events if e.stage == stage.value]

    def by_window(self, index: int) -> List[DelineationEvent]:
        return [e for e in self.events if e.window == index]

    def beats_per_window(self) -> Dict[int, int]:
        """Beat count each window reported on completion, before merging."""
        return {
            e.window: e.details.get("beats", 0)
            for e in self.by_stage(DelineationStage.COMPLETED)
            if e.window is not None
        }
