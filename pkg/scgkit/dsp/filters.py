"""
Zero-phase Butterworth filters and amplitude normalization.

All filters are designed as second-order sections and applied
forward-backward with ``scipy.signal.sosfiltfilt``, so fiducial timing is
not shifted. Every function is pure and returns a new SampledSignal.
"""

from enum import Enum
from typing import Union

import numpy as np
from scipy import signal as sps

from ..core.errors import DegenerateInputError, InputError, ParameterError
from ..core.types import SampledSignal


class NormalizeMode(str, Enum):
    """Amplitude normalization modes."""
    MAX_ABS = "max-abs"
    MIN_MAX = "min-max"


def _padlen(sos: np.ndarray) -> int:
    # Same default sosfiltfilt uses for odd-extension padding
    n_zeros = min(int((sos[:, 2] == 0).sum()), int((sos[:, 5] == 0).sum()))
    return 3 * (2 * len(sos) + 1 - n_zeros)


def _apply_zero_phase(signal: SampledSignal, sos: np.ndarray) -> SampledSignal:
    signal.require_nonempty()
    padlen = _padlen(sos)
    if len(signal) <= padlen:
        raise InputError(
            f"signal has {len(signal)} samples, filter warm-up needs more than {padlen}",
            signal.label,
        )
    return signal.with_samples(sps.sosfiltfilt(sos, signal.samples, padlen=padlen))


def _check_order(order: int) -> None:
    if int(order) != order or order < 1:
        raise ParameterError("order", order, "integer >= 1")


def highpass_detrend(signal: SampledSignal, cutoff_hz: float, order: int = 2) -> SampledSignal:
    """
    Remove baseline drift with a zero-phase Butterworth high-pass filter.

    Args:
        signal: Input signal
        cutoff_hz: -3 dB cutoff, must satisfy 0 < cutoff_hz < fs/2
        order: Butterworth order of one pass (the forward-backward
            application doubles the effective attenuation)

    Returns:
        Detrended signal of identical length and sampling rate

    Raises:
        ParameterError: If the cutoff is outside (0, fs/2)
        InputError: If the signal is shorter than the filter warm-up
    """
    nyquist = signal.fs / 2.0
    if not 0.0 < cutoff_hz < nyquist:
        raise ParameterError("cutoff_hz", cutoff_hz, f"0 < cutoff_hz < fs/2 ({nyquist})")
    _check_order(order)
    sos = sps.butter(int(order), cutoff_hz, btype="highpass", fs=signal.fs, output="sos")
    return _apply_zero_phase(signal, sos)


def lowpass(signal: SampledSignal, cutoff_hz: float, order: int = 4) -> SampledSignal:
    """
    Zero-phase Butterworth low-pass filter.

    Used as the optional digital anti-alias stage (mirrors a 50 Hz
    acquisition low-pass) and to band-limit synthetic noise.
    """
    nyquist = signal.fs / 2.0
    if not 0.0 < cutoff_hz < nyquist:
        raise ParameterError("cutoff_hz", cutoff_hz, f"0 < cutoff_hz < fs/2 ({nyquist})")
    _check_order(order)
    sos = sps.butter(int(order), cutoff_hz, btype="lowpass", fs=signal.fs, output="sos")
    return _apply_zero_phase(signal, sos)


def bandpass(
    signal: SampledSignal,
    low_hz: float,
    high_hz: float,
    order: int = 4,
) -> SampledSignal:
    """
    Zero-phase Butterworth band-pass filter.

    Args:
        signal: Input signal
        low_hz: Lower band edge in Hz
        high_hz: Upper band edge in Hz
        order: Butterworth prototype order (>= 2)

    Raises:
        ParameterError: Unless 0 < low_hz < high_hz < fs/2 and order >= 2

    Example:
        >>> filtered = bandpass(scg, 20.0, 30.0, order=4)
    """
    nyquist = signal.fs / 2.0
    if not 0.0 < low_hz < high_hz < nyquist:
        raise ParameterError(
            "band", (low_hz, high_hz), f"0 < low_hz < high_hz < fs/2 ({nyquist})"
        )
    if int(order) != order or order < 2:
        raise ParameterError("order", order, "integer >= 2")
    sos = sps.butter(int(order), [low_hz, high_hz], btype="bandpass", fs=signal.fs, output="sos")
    return _apply_zero_phase(signal, sos)


def normalize_unit(
    signal: SampledSignal,
    mode: Union[NormalizeMode, str] = NormalizeMode.MIN_MAX,
) -> SampledSignal:
    """
    Scale a signal to [-1, 1] (max-abs) or [0, 1] (min-max).

    Raises:
        DegenerateInputError: For an all-zero signal under max-abs or an
            all-equal signal under min-max
    """
    signal.require_nonempty()
    mode = NormalizeMode(mode)
    x = signal.samples

    if mode is NormalizeMode.MAX_ABS:
        peak = float(np.max(np.abs(x)))
        if peak == 0.0:
            raise DegenerateInputError("max-abs normalization of an all-zero signal", signal.label)
        return signal.with_samples(x / peak)

    lo = float(np.min(x))
    hi = float(np.max(x))
    if hi == lo:
        raise DegenerateInputError("min-max normalization of a constant signal", signal.label)
    out = (x - lo) / (hi - lo)
    # Guard the endpoints against rounding so the range is exactly [0, 1]
    out[x == lo] = 0.0
    out[x == hi] = 1.0
    return signal.with_samples(np.clip(out, 0.0, 1.0))
