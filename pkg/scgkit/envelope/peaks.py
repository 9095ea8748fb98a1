"""
Impulse-peak extraction from transfer envelopes.

Amplitude-temporal thresholding: a local maximum is accepted when it
exceeds a fraction of the running maximum over a centred window, and
accepted peaks keep a refractory distance. Conflicts inside the
refractory distance are resolved in favour of the larger peak by
``scipy.signal.find_peaks``.
"""

import math

import numpy as np
from scipy import signal as sps
from scipy.ndimage import maximum_filter1d

from ..core.errors import InputError, ParameterError
from ..core.types import ExtremaKind, ExtremaList, SampledSignal


def moving_maximum(envelope: SampledSignal, window_s: float) -> np.ndarray:
    """Centred running maximum over ``window_s`` seconds, edges held constant."""
    size = max(1, int(round(window_s * envelope.fs)))
    return maximum_filter1d(envelope.samples, size=size, mode="nearest")


def impulse_peaks(
    envelope: SampledSignal,
    threshold_frac: float = 0.3,
    refractory_ms: float = 300.0,
    window_s: float = 2.0,
) -> ExtremaList:
    """
    Accept envelope maxima above a relative threshold with a refractory rule.

    Args:
        envelope: Non-negative envelope
        threshold_frac: Fraction of the running maximum a peak must exceed
        refractory_ms: Minimum separation of accepted peaks
        window_s: Running-maximum window length

    Returns:
        ExtremaList of accepted peaks (first sample of a plateau);
        empty for an all-zero envelope

    Raises:
        ParameterError: If threshold_frac is outside (0, 1) or
            refractory_ms / window_s is not positive
        InputError: If the envelope has negative samples

    Example:
        >>> env = np.zeros(3000); env[[1000, 1800]] = 1.0
        >>> impulse_peaks(SampledSignal(env, 1000.0)).tolist()
        [1000, 1800]
    """
    if not 0.0 < threshold_frac < 1.0:
        raise ParameterError("threshold_frac", threshold_frac, "0 < threshold_frac < 1")
    if refractory_ms <= 0:
        raise ParameterError("refractory_ms", refractory_ms, "refractory_ms > 0")
    if window_s <= 0:
        raise ParameterError("window_s", window_s, "window_s > 0")
    envelope.require_nonempty()

    x = envelope.samples
    if x.min() < 0.0:
        raise InputError("envelope must be non-negative", envelope.label)
    if x.max() == 0.0 or x.size < 3:
        return ExtremaList(np.empty(0, dtype=np.int64), ExtremaKind.MAXIMA)

    threshold = threshold_frac * moving_maximum(envelope, window_s)
    distance = max(1, math.ceil(refractory_ms * envelope.fs / 1000.0))
    _, props = sps.find_peaks(
        x,
        height=np.nextafter(threshold, np.inf),
        distance=distance,
        plateau_size=1,
    )
    return ExtremaList(props["left_edges"], ExtremaKind.MAXIMA)
