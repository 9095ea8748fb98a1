"""
Continuous wavelet transform with the Gaus-2 (Mexican hat) mother wavelet.

The transform correlates the signal with dilated copies of the prototype

    psi(t) = C (1 - t^2) exp(-t^2 / 2),   C = sqrt(4 / (3 sqrt(pi)))

which has unit L2 norm. A kernel for scale ``l`` (seconds) holds
``psi(n / (l fs)) / sqrt(l)`` for every integer offset ``n`` with
``|n / (l fs)| <= half_width``.

Rows are computed with ``scipy.signal.fftconvolve`` on a symmetrically
padded copy of the signal. The kernel is even, so convolution and
correlation coincide.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy import signal as sps

from ..core.errors import DegenerateInputError, InputError, ParameterError
from ..core.types import SampledSignal

GAUS2_NORM = float(np.sqrt(4.0 / (3.0 * np.sqrt(np.pi))))
"""Normalization constant C of the Gaus-2 prototype (about 0.867325)."""

DEFAULT_HALF_WIDTH = 5.0


def gaus2(t: np.ndarray) -> np.ndarray:
    """Evaluate the unit-energy Gaus-2 prototype."""
    t = np.asarray(t, dtype=np.float64)
    t2 = t * t
    return GAUS2_NORM * (1.0 - t2) * np.exp(-0.5 * t2)


@dataclass(frozen=True)
class WaveletKernel:
    """
    Sampled Gaus-2 kernel at one scale.

    Attributes:
        scale: Scale l in seconds
        offsets: Integer sample offsets, symmetric around 0
        values: psi(offset / (l fs)) / sqrt(l)
    """

    scale: float
    offsets: np.ndarray
    values: np.ndarray

    @property
    def half_length(self) -> int:
        return int(self.offsets[-1])

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class CwtMatrix:
    """Wavelet coefficients, one row per scale and one column per sample."""

    coefficients: np.ndarray
    scales: np.ndarray
    fs: float


@dataclass(frozen=True)
class Scalogram:
    """Squared coefficients normalized so that all entries sum to 1."""

    energies: np.ndarray
    scales: np.ndarray
    fs: float


@dataclass(frozen=True)
class MrweSeries:
    """
    Maximum relative wavelet energy over scales, per time sample.

    Attributes:
        values: Column-wise maximum of the scalogram
        argmax_scales: Row index of that maximum (smallest index on ties)
    """

    values: np.ndarray
    argmax_scales: np.ndarray

    def to_signal(self, fs: float, label: str = "mrwe") -> SampledSignal:
        return SampledSignal(self.values, fs, label)


def default_scales(fs: float, scale_min: int = 1, scale_max: int = 150) -> np.ndarray:
    """
    Integer scale grid ``scale_min..scale_max`` in units of samples, as seconds.

    Example:
        >>> default_scales(1000.0)[:3]
        array([0.001, 0.002, 0.003])
    """
    if scale_min < 1 or scale_max < scale_min:
        raise ParameterError("scales", (scale_min, scale_max), "1 <= scale_min <= scale_max")
    return np.arange(scale_min, scale_max + 1, dtype=np.float64) / fs


def gaus2_kernel(scale: float, fs: float, half_width: float = DEFAULT_HALF_WIDTH) -> WaveletKernel:
    """
    Sample the Gaus-2 wavelet at one scale.

    Args:
        scale: Scale l in seconds, > 0
        fs: Sampling rate in Hz
        half_width: Truncation point in prototype units (|t/l| <= half_width)

    Returns:
        WaveletKernel with odd length and symmetric values

    Raises:
        ParameterError: If scale or fs is not positive
    """
    if not np.isfinite(scale) or scale <= 0:
        raise ParameterError("scale", scale, "scale > 0")
    if fs <= 0:
        raise ParameterError("fs", fs, "fs > 0")
    if half_width <= 0:
        raise ParameterError("half_width", half_width, "half_width > 0")

    width = scale * fs
    # Small epsilon so that an exact boundary sample is kept
    half = int(np.floor(half_width * width + 1e-9))
    offsets = np.arange(-half, half + 1, dtype=np.int64)
    values = gaus2(offsets / width) / np.sqrt(scale)
    return WaveletKernel(scale=float(scale), offsets=offsets, values=values)


def cwt(
    signal: SampledSignal,
    scales: Optional[Iterable[float]] = None,
    half_width: float = DEFAULT_HALF_WIDTH,
) -> CwtMatrix:
    """
    Continuous wavelet transform over the given scales.

    Args:
        signal: Input signal
        scales: Scales in seconds (default: ``default_scales(signal.fs)``)
        half_width: Kernel truncation in prototype units

    Returns:
        CwtMatrix of shape (len(scales), len(signal))

    Raises:
        ParameterError: If the scale list is empty or holds a non-positive scale
        InputError: If the signal is shorter than the longest kernel
    """
    signal.require_nonempty()
    scale_arr = (
        default_scales(signal.fs)
        if scales is None
        else np.asarray(list(scales), dtype=np.float64).reshape(-1)
    )
    if scale_arr.size == 0:
        raise ParameterError("scales", [], "at least one scale")

    kernels = [gaus2_kernel(s, signal.fs, half_width) for s in scale_arr]
    pad = max(k.half_length for k in kernels)
    longest = 2 * pad + 1
    n = len(signal)
    if n < longest:
        raise InputError(
            f"signal has {n} samples, longest wavelet kernel needs {longest}", signal.label
        )

    padded = np.pad(signal.samples, pad, mode="symmetric")
    coefficients = np.empty((scale_arr.size, n), dtype=np.float64)
    for row, kernel in enumerate(kernels):
        k = kernel.half_length
        window = padded[pad - k : pad + n + k]
        coefficients[row] = sps.fftconvolve(window, kernel.values, mode="valid")

    return CwtMatrix(coefficients=coefficients, scales=scale_arr, fs=signal.fs)


def scalogram(coeffs: CwtMatrix) -> Scalogram:
    """
    Normalized energy density |w|^2 / sum(|w|^2).

    Raises:
        InputError: If the coefficient matrix is empty
        DegenerateInputError: If every coefficient is zero
    """
    energy = np.abs(np.asarray(coeffs.coefficients, dtype=np.float64)) ** 2
    if energy.size == 0:
        raise InputError("empty coefficient matrix")
    total = float(energy.sum())
    if total == 0.0:
        raise DegenerateInputError("all wavelet coefficients are zero")
    return Scalogram(energies=energy / total, scales=coeffs.scales, fs=coeffs.fs)


def mrwe(scalo: Scalogram) -> MrweSeries:
    """Column-wise maximum of the scalogram and the row holding it."""
    energies = np.asarray(scalo.energies)
    if energies.size == 0:
        raise InputError("empty scalogram")
    argmax = np.argmax(energies, axis=0)
    values = energies[argmax, np.arange(energies.shape[1])]
    return MrweSeries(values=values, argmax_scales=argmax.astype(np.int64))


def mrwe_signal(
    signal: SampledSignal,
    scales: Optional[Sequence[float]] = None,
    half_width: float = DEFAULT_HALF_WIDTH,
) -> SampledSignal:
    """Convenience chain cwt -> scalogram -> mrwe returning a SampledSignal."""
    series = mrwe(scalogram(cwt(signal, scales, half_width)))
    return series.to_signal(signal.fs, label=f"{signal.label}-mrwe")
