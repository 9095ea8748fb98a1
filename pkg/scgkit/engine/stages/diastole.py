"""
Diastole Stage - pAC around each PPG apex, AC and MO by decision rules.
"""

from typing import Optional, Tuple

from ..context import DelineationContext
from ..diastole import diastole_from_detrended
from ..pipeline import PipelineStage
from ...core.events import DelineationStage


class DiastoleStage(PipelineStage):
    """Delineate (AC, pAC, MO) on the detrended SCG of the window."""

    def __init__(self):
        super().__init__(
            name="Diastole Delineation",
            stage_type=DelineationStage.DIASTOLE,
        )

    def execute(self, context: DelineationContext) -> Tuple[bool, Optional[str]]:
        self.emit_started("Delineating diastole profiles")
        context.diastoles = diastole_from_detrended(
            context.scg_detrended, context.ppg_peaks, context.config, self.logger
        )

        if not context.diastoles:
            self.emit_failed("No diastole delineated")
            return False, "No diastole"

        self.emit_passed(
            f"{len(context.diastoles)} diastoles", {"count": len(context.diastoles)}
        )
        return True, None
