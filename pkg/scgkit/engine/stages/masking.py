"""
Masking Stage - Zero every delineated diastole before systole detection.
"""

from typing import Optional, Tuple

from ..context import DelineationContext
from ..diastole import mask_diastole, mask_intervals
from ..pipeline import PipelineStage
from ...core.events import DelineationStage


class MaskingStage(PipelineStage):
    """Replace [AC - guard, MO + guard] by zeros in the detrended SCG."""

    def __init__(self):
        super().__init__(
            name="Diastole Masking",
            stage_type=DelineationStage.MASKING,
        )

    def execute(self, context: DelineationContext) -> Tuple[bool, Optional[str]]:
        guard_ms = context.config.mask_guard_ms
        scg = context.scg_detrended
        context.masked_scg = mask_diastole(scg, context.diastoles, guard_ms)
        context.masked_intervals = mask_intervals(
            context.diastoles, scg.ms_to_samples(guard_ms), len(scg)
        )

        masked = sum(stop - start + 1 for start, stop in context.masked_intervals)
        context.metadata["masked_fraction"] = masked / len(scg)
        self.emit_info(
            f"Masked {len(context.masked_intervals)} regions",
            {"regions": len(context.masked_intervals), "samples": masked},
        )
        return True, None
