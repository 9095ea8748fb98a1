"""
PPG systolic-apex detection.

The detrended PPG is summed with its MRWE series (rescaled to the PPG's
amplitude range), normalized, passed through the transfer envelope and
thresholded. The MRWE is kept only where the Gaus-2 coefficient at the
winning scale is positive, i.e. around pulse apices; troughs between
pulses carry as much wavelet energy but a negative coefficient.

Each accepted impulse is then moved onto the nearest local maximum of
the detrended PPG within ppg_relocate_ms; an impulse with no maximum in
reach is discarded.
"""

from typing import Optional

import numpy as np

from ..core.config import DelineatorConfig
from ..core.errors import InputError
from ..core.types import ExtremaList, SampledSignal
from ..dsp.extrema import relocate_to_maxima
from ..dsp.filters import highpass_detrend
from ..envelope.peaks import impulse_peaks
from ..envelope.transfer import EnvelopeModel, rectify_and_transfer
from ..wavelets.scalogram import cwt, default_scales, mrwe, scalogram

MIN_PPG_SECONDS = 3.0


def rescale_to_range(values: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Affinely map ``values`` onto the [min, max] range of ``reference``."""
    lo, hi = float(reference.min()), float(reference.max())
    span = float(np.ptp(values))
    if span == 0.0:
        return np.full_like(values, lo, dtype=np.float64)
    return lo + (values - values.min()) / span * (hi - lo)


def ppg_ensemble(
    detrended: SampledSignal, config: Optional[DelineatorConfig] = None
) -> SampledSignal:
    """
    Detrended PPG plus its apex-polarity MRWE series rescaled to the same
    amplitude range.

    Raises:
        DegenerateInputError: For a flat PPG (the scalogram is undefined)
    """
    config = config or DelineatorConfig()
    scales = default_scales(detrended.fs, config.scale_min, config.scale_max)
    coefficients = cwt(detrended, scales, config.kernel_half_width)
    series = mrwe(scalogram(coefficients))
    winning = coefficients.coefficients[series.argmax_scales, np.arange(len(detrended))]
    apex_energy = np.where(winning > 0.0, series.values, 0.0)
    rescaled = rescale_to_range(apex_energy, detrended.samples)
    return detrended.with_samples(detrended.samples + rescaled)


def detect_ppg_peaks(
    ppg: SampledSignal, config: Optional[DelineatorConfig] = None
) -> ExtremaList:
    """
    Systolic PPG apices.

    Args:
        ppg: PPG channel, at least 3 s long
        config: Detrending, scalogram, envelope and relocation settings

    Returns:
        Sorted apex indices

    Raises:
        InputError: If the record is shorter than 3 s
        DegenerateInputError: If the PPG is flat

    Example:
        >>> peaks = detect_ppg_peaks(ppg)
        >>> len(peaks)
        60
    """
    config = config or DelineatorConfig()
    if len(ppg) < MIN_PPG_SECONDS * ppg.fs:
        raise InputError(
            f"PPG must span at least {MIN_PPG_SECONDS:g} s, got {ppg.duration_s:.3f} s", ppg.label
        )

    detrended = highpass_detrend(ppg, config.detrend_cutoff_hz, config.filter_order)
    ensemble = ppg_ensemble(detrended, config)
    envelope = rectify_and_transfer(ensemble, EnvelopeModel(config.envelope_p, config.envelope_q))
    impulses = impulse_peaks(
        envelope,
        config.impulse_threshold_frac,
        config.impulse_refractory_ms,
        config.moving_max_window_s,
    )
    return relocate_to_maxima(
        detrended.samples, impulses, ppg.ms_to_samples(config.ppg_relocate_ms)
    )
