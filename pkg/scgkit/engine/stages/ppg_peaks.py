"""
PPG Peak Stage - Detrend both channels and find systolic PPG apices.
"""

from typing import Optional, Tuple

from ..context import DelineationContext
from ..pipeline import PipelineStage
from ..ppg import detect_ppg_peaks
from ...core.errors import DegenerateInputError
from ...core.events import DelineationStage
from ...dsp.filters import highpass_detrend


class PpgPeakStage(PipelineStage):
    """
    Detect PPG apices for the window.

    Also stores the detrended SCG in the context for the SCG stages. A
    flat PPG window (no pulsatile content) stops the window.
    """

    def __init__(self):
        super().__init__(
            name="PPG Peak Detection",
            stage_type=DelineationStage.PPG_PEAKS,
        )

    def execute(self, context: DelineationContext) -> Tuple[bool, Optional[str]]:
        self.emit_started("Detecting PPG apices")
        config = context.config
        context.scg_detrended = highpass_detrend(
            context.scg, config.detrend_cutoff_hz, config.filter_order
        )

        try:
            context.ppg_peaks = detect_ppg_peaks(context.ppg, config)
        except DegenerateInputError as e:
            if self.logger:
                self.logger.warning(f"Window {context.window_index}: {e}")
            self.emit_warning("Flat PPG window", {"error": str(e)})
            return False, "Flat PPG"

        count = len(context.ppg_peaks)
        if self.logger:
            self.logger.debug(f"Window {context.window_index}: {count} PPG apices")
        if count == 0:
            self.emit_failed("No PPG apices found")
            return False, "No PPG apices"

        self.emit_passed(f"{count} PPG apices", {"count": count})
        return True, None
