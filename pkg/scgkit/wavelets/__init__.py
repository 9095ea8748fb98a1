"""
scgkit Wavelets Module.

Gaus-2 continuous wavelet transform, normalized scalogram and the maximum
relative wavelet energy (MRWE) series.

Example:
    >>> from scgkit.wavelets import cwt, scalogram, mrwe
    >>> series = mrwe(scalogram(cwt(ppg)))
"""

from .scalogram import (
    DEFAULT_HALF_WIDTH,
    GAUS2_NORM,
    CwtMatrix,
    MrweSeries,
    Scalogram,
    WaveletKernel,
    cwt,
    default_scales,
    gaus2,
    gaus2_kernel,
    mrwe,
    mrwe_signal,
    scalogram,
)

__all__ = [
    "DEFAULT_HALF_WIDTH",
    "GAUS2_NORM",
    "CwtMatrix",
    "MrweSeries",
    "Scalogram",
    "WaveletKernel",
    "cwt",
    "default_scales",
    "gaus2",
    "gaus2_kernel",
    "mrwe",
    "mrwe_signal",
    "scalogram",
]
