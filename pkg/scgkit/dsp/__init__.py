"""
scgkit signal core.

Zero-phase Butterworth filters, amplitude normalization and extrema
search shared by every downstream module.

Example:
    >>> from scgkit.dsp import highpass_detrend, bandpass, local_extrema
    >>> detrended = highpass_detrend(ppg, cutoff_hz=0.5)
    >>> peaks = local_extrema(detrended, "maxima")
"""

from .extrema import extrema_indices, local_extrema, relocate_to_maxima
from .filters import NormalizeMode, bandpass, highpass_detrend, lowpass, normalize_unit

__all__ = [
    "NormalizeMode",
    "bandpass",
    "extrema_indices",
    "highpass_detrend",
    "local_extrema",
    "lowpass",
    "normalize_unit",
    "relocate_to_maxima",
]
