"""
Systole Stage - AO from the masked SCG, IM and IC by decision rules,
then pairing with the diastoles into beat annotations.
"""

from typing import Optional, Tuple

from ..assembly import pair_beats
from ..context import DelineationContext
from ..pipeline import PipelineStage
from ..systole import detect_ao, systole_from_masked
from ...core.events import DelineationStage


class SystoleStage(PipelineStage):
    """
    Delineate (IM, AO, IC) and assemble beats.

    Windows without any AO still yield their diastole-only beats.
    """

    def __init__(self):
        super().__init__(
            name="Systole Delineation",
            stage_type=DelineationStage.SYSTOLE,
        )

    def execute(self, context: DelineationContext) -> Tuple[bool, Optional[str]]:
        self.emit_started("Delineating systole profiles")
        context.ao_peaks = detect_ao(
            context.masked_scg,
            reference=context.scg_detrended,
            intervals=context.masked_intervals,
            config=context.config,
        )
        context.systoles = systole_from_masked(
            context.masked_scg,
            context.ao_peaks,
            context.masked_intervals,
            context.config,
            self.logger,
        )
        if not context.systoles:
            if self.logger:
                self.logger.warning(f"Window {context.window_index}: no AO detected")
            self.emit_warning("No systole delineated")

        context.beats = pair_beats(context.systoles, context.diastoles, context.fs)
        complete = sum(beat.is_complete for beat in context.beats)
        self.emit_passed(
            f"{len(context.beats)} beats ({complete} complete)",
            {"beats": len(context.beats), "complete": complete},
        )
        return True, None
