"""
Local extrema search.
"""

from typing import Iterable, Optional, Union

import numpy as np
from scipy import signal as sps

from ..core.errors import InputError
from ..core.types import ExtremaKind, ExtremaList, SampledSignal


def extrema_indices(x: np.ndarray, kind: Union[ExtremaKind, str] = ExtremaKind.MAXIMA) -> np.ndarray:
    """
    Indices of strict local extrema of a 1-D array.

    A plateau counts once, at its first sample. Endpoints are never
    reported. Arrays shorter than 3 samples have no interior extrema.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.size < 3:
        return np.empty(0, dtype=np.int64)
    values = x if ExtremaKind(kind) is ExtremaKind.MAXIMA else -x
    _, props = sps.find_peaks(values, plateau_size=1)
    return props["left_edges"].astype(np.int64)


def local_extrema(
    signal: SampledSignal,
    kind: Union[ExtremaKind, str] = ExtremaKind.MAXIMA,
) -> ExtremaList:
    """
    Every strict local maximum or minimum of a signal.

    Args:
        signal: Input signal with at least 3 samples
        kind: "maxima" or "minima"

    Returns:
        ExtremaList with strictly increasing indices

    Raises:
        InputError: If the signal has fewer than 3 samples

    Example:
        >>> local_extrema(SampledSignal([0, 1, 0, 2, 0], 1000.0)).tolist()
        [1, 3]
    """
    if len(signal) < 3:
        raise InputError(f"need at least 3 samples, got {len(signal)}", signal.label)
    kind = ExtremaKind(kind)
    return ExtremaList(extrema_indices(signal.samples, kind), kind)


def relocate_to_maxima(
    x: np.ndarray,
    indices: Iterable[int],
    radius: int,
    forbidden: Optional[np.ndarray] = None,
) -> ExtremaList:
    """
    Move each index to the nearest strict local maximum of ``x`` within ``radius``.

    Equidistant candidates resolve to the larger amplitude, then to the
    earlier sample. An index with no maximum in reach is dropped.
    Maxima flagged in the boolean ``forbidden`` mask are never chosen.
    Results are sorted and duplicates collapse to one.
    """
    x = np.asarray(x, dtype=np.float64)
    maxima = extrema_indices(x, ExtremaKind.MAXIMA)
    if forbidden is not None and maxima.size:
        maxima = maxima[~forbidden[maxima]]

    moved = []
    for idx in indices:
        idx = int(idx)
        lo = np.searchsorted(maxima, idx - radius, side="left")
        hi = np.searchsorted(maxima, idx + radius, side="right")
        candidates = maxima[lo:hi]
        if candidates.size == 0:
            continue
        # lexsort: last key is primary
        order = np.lexsort((candidates, -x[candidates], np.abs(candidates - idx)))
        moved.append(int(candidates[order[0]]))
    return ExtremaList.from_unsorted(moved, ExtremaKind.MAXIMA)
