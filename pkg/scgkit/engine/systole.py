"""
Systole delineation (IM, AO, IC) on the diastole-masked SCG.

AO dominates the 20-30 Hz band of a systolic profile even when MC or RE
are larger in the raw signal. The band-passed masked SCG is turned into
an instantaneous-energy series (squared analytic-signal magnitude),
normalized and pushed through the transfer envelope; its impulses are
the AO candidates.
"""

from typing import List, NamedTuple, Optional, Sequence

import numpy as np
from scipy import signal as sps

from ..core.config import DelineatorConfig
from ..core.interfaces import LoggerProtocol
from ..core.types import ExtremaKind, ExtremaList, SampledSignal
from ..dsp.extrema import relocate_to_maxima
from ..dsp.filters import bandpass
from ..envelope.peaks import impulse_peaks
from ..envelope.transfer import EnvelopeModel, transfer_envelope
from .decision_rules import Interval, decision_rules
from .diastole import masked_flags, rule_config


class SystoleTriple(NamedTuple):
    """Isovolumic moment, aortic opening and isotonic contraction."""
    im: int
    ao: int
    ic: int


def instantaneous_energy(signal: SampledSignal) -> SampledSignal:
    """Squared magnitude of the analytic signal (upper envelope squared)."""
    upper = np.abs(sps.hilbert(signal.samples))
    return signal.with_samples(upper * upper)


def _empty() -> ExtremaList:
    return ExtremaList(np.empty(0, dtype=np.int64), ExtremaKind.MAXIMA)


def detect_ao(
    masked_scg: SampledSignal,
    reference: Optional[SampledSignal] = None,
    intervals: Optional[Sequence[Interval]] = None,
    config: Optional[DelineatorConfig] = None,
) -> ExtremaList:
    """
    AO candidates, ideally one per unmasked systolic region.

    Args:
        masked_scg: Detrended SCG with diastoles zeroed
        reference: Unmasked detrended SCG used for peak correction
            (defaults to ``masked_scg``)
        intervals: Masked intervals; candidates inside them are discarded
        config: Band, envelope, threshold and correction settings

    Returns:
        Sorted AO indices; empty for an all-zero input
    """
    config = config or DelineatorConfig()
    reference = reference if reference is not None else masked_scg
    if not np.any(masked_scg.samples):
        return _empty()

    band = bandpass(
        masked_scg,
        config.systole_band_low_hz,
        config.systole_band_high_hz,
        config.systole_band_order,
    )
    energy = instantaneous_energy(band).samples
    span = float(np.ptp(energy))
    if span == 0.0:
        return _empty()
    normalized = masked_scg.with_samples((energy - energy.min()) / span)
    envelope = transfer_envelope(normalized, EnvelopeModel(config.envelope_p, config.envelope_q))
    impulses = impulse_peaks(
        envelope,
        config.impulse_threshold_frac,
        config.impulse_refractory_ms,
        config.moving_max_window_s,
    )

    return relocate_to_maxima(
        reference.samples,
        impulses,
        masked_scg.ms_to_samples(config.ao_relocate_ms),
        forbidden=masked_flags(intervals or [], len(masked_scg)),
    )


def systole_from_masked(
    masked_scg: SampledSignal,
    ao: ExtremaList,
    intervals: Sequence[Interval],
    config: DelineatorConfig,
    logger: Optional[LoggerProtocol] = None,
) -> List[SystoleTriple]:
    """
    IM and IC as the decision-rule minima around each AO.

    Blocks are truncated at neighbouring masked regions.
    """
    points = decision_rules(masked_scg, ao, rule_config(config), logger, masked=intervals)
    triples = []
    for pts in points:
        if pts.m1 < pts.pks < pts.m2:
            triples.append(SystoleTriple(im=pts.m1, ao=pts.pks, ic=pts.m2))
        elif logger:
            logger.debug(f"Dropping systole at AO {pts.pks}: IM/IC not around it")
    return triples
