"""
Delineation context for pipeline stages.

This module provides the DelineationContext dataclass that holds all state
passed through the stages delineating one processing window.

Example:
    >>> context = DelineationContext(scg=scg_window, ppg=ppg_window, config=config)
    >>> # Pipeline stages fill the context
    >>> context.ppg_peaks = detect_ppg_peaks(context.ppg, context.config)
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from ..core.config import DelineatorConfig
from ..core.events import DelineationEvent
from ..core.types import BeatAnnotation, ExtremaList, SampledSignal
from .decision_rules import Interval
from .diastole import DiastoleTriple
from .systole import SystoleTriple


@dataclass
class DelineationContext:
    """
    Context passed through delineation pipeline stages.

    Each stage reads what earlier stages produced and stores its own
    result, so stages stay decoupled.

    Attributes:
        scg: SCG samples of the window
        ppg: PPG samples of the window
        config: Effective configuration
        offset: Record index of the window's first sample
        window_index: Position of the window in the record
        scg_detrended: Detrended SCG (set by the PPG peak stage)
        ppg_peaks: Systolic PPG apices
        diastoles: (AC, pAC, MO) triples
        masked_scg: Detrended SCG with diastoles zeroed
        masked_intervals: Closed intervals that were zeroed
        ao_peaks: AO candidates
        systoles: (IM, AO, IC) triples
        beats: Assembled annotations, window-relative
        events: Events emitted while processing the window
        metadata: Free-form per-window details
    """

    # Required inputs
    scg: SampledSignal
    ppg: SampledSignal
    config: DelineatorConfig = field(default_factory=DelineatorConfig)
    offset: int = 0
    window_index: int = 0

    # Stage outputs (populated by pipeline stages)
    scg_detrended: Optional[SampledSignal] = None
    ppg_peaks: Optional[ExtremaList] = None
    diastoles: List[DiastoleTriple] = field(default_factory=list)
    masked_scg: Optional[SampledSignal] = None
    masked_intervals: List[Interval] = field(default_factory=list)
    ao_peaks: Optional[ExtremaList] = None
    systoles: List[SystoleTriple] = field(default_factory=list)
    beats: List[BeatAnnotation] = field(default_factory=list)

    # Event tracking
    events: List[DelineationEvent] = field(default_factory=list)

    # Extensibility
    metadata: Dict[str, Any] = field(default_factory=dict)

    # Final result
    completed: bool = False
    reason: str = "Delineation not completed"

    @property
    def fs(self) -> float:
        return self.scg.fs

    def add_event(self, event: DelineationEvent) -> None:
        """Add a pipeline event to the context."""
        self.events.append(event)

    def stop(self, reason: str) -> None:
        """Mark the window as finished early (nothing more to find)."""
        self.completed = False
        self.reason = reason

    def finish(self, reason: str = "All stages completed") -> None:
        self.completed = True
        self.reason = reason

    def record_beats(self) -> List[BeatAnnotation]:
        """Beats shifted to record indices."""
        return [beat.shifted(self.offset) for beat in self.beats]

    def to_dict(self) -> Dict[str, Any]:
        """Convert context to dictionary for serialization."""
        return {
            "window_index": self.window_index,
            "offset": self.offset,
            "n_samples": len(self.scg),
            "ppg_peaks": 0 if self.ppg_peaks is None else len(self.ppg_peaks),
            "diastoles": len(self.diastoles),
            "systoles": len(self.systoles),
            "beats": len(self.beats),
            "completed": self.completed,
            "reason": self.reason,
            "metadata": self.metadata,
        }
