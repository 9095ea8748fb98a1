"""
scgkit Envelope Module.

Exponential-ratio transfer envelope, its (p, q) least-squares fit, the
Shannon entropy/energy baselines and impulse-peak extraction.

Example:
    >>> from scgkit.envelope import EnvelopeModel, rectify_and_transfer, impulse_peaks
    >>> env = rectify_and_transfer(energy, EnvelopeModel(39, 16))
    >>> peaks = impulse_peaks(env, threshold_frac=0.3, refractory_ms=300)
"""

from .baselines import shannon_envelopes
from .peaks import impulse_peaks, moving_maximum
from .transfer import (
    FIT_GRID_STEP,
    EnvelopeModel,
    TargetCurve,
    fit_pq,
    rectify_and_transfer,
    transfer_envelope,
)

__all__ = [
    "FIT_GRID_STEP",
    "EnvelopeModel",
    "TargetCurve",
    "fit_pq",
    "impulse_peaks",
    "moving_maximum",
    "rectify_and_transfer",
    "shannon_envelopes",
    "transfer_envelope",
]
