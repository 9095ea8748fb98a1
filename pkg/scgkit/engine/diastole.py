"""
Diastole delineation (AC, pAC, MO) and diastole masking.
"""

from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..core.config import DelineatorConfig
from ..core.errors import InputError, ParameterError
from ..core.interfaces import LoggerProtocol
from ..core.types import DecisionRuleConfig, ExtremaKind, ExtremaList, SampledSignal
from ..dsp.filters import highpass_detrend
from .decision_rules import Interval, decision_rules
from .ppg import detect_ppg_peaks


class DiastoleTriple(NamedTuple):
    """Aortic closure, its prominent follow-up peak and mitral opening."""
    ac: int
    pac: int
    mo: int


def rule_config(config: DelineatorConfig) -> DecisionRuleConfig:
    return DecisionRuleConfig(block_a_ms=config.block_a_ms, block_b_ms=config.block_b_ms)


def check_synchronized(scg: SampledSignal, ppg: SampledSignal) -> None:
    """Raise InputError unless both channels share fs and length."""
    if scg.fs != ppg.fs:
        raise InputError(f"channels have different sampling rates ({scg.fs} vs {ppg.fs} Hz)")
    if len(scg) != len(ppg):
        raise InputError(f"channels have different lengths ({len(scg)} vs {len(ppg)})")


def locate_pac(
    scg: SampledSignal, ppg_peaks: Iterable[int], half_window_ms: float = 100.0
) -> ExtremaList:
    """
    SCG maximum inside a symmetric window around each PPG apex.

    Apices whose window leaves the record are dropped. Several apices
    landing on the same SCG maximum give one pAC.

    Raises:
        ParameterError: If half_window_ms is not positive
    """
    if half_window_ms <= 0:
        raise ParameterError("half_window_ms", half_window_ms, "half_window_ms > 0")
    half = scg.ms_to_samples(half_window_ms)
    x = scg.samples
    n = len(scg)

    found = []
    for peak in ppg_peaks:
        lo, hi = int(peak) - half, int(peak) + half
        if lo < 0 or hi > n - 1:
            continue
        found.append(lo + int(np.argmax(x[lo : hi + 1])))
    return ExtremaList.from_unsorted(found, ExtremaKind.MAXIMA)


def diastole_from_detrended(
    detrended_scg: SampledSignal,
    ppg_peaks: Iterable[int],
    config: DelineatorConfig,
    logger: Optional[LoggerProtocol] = None,
) -> List[DiastoleTriple]:
    """Diastole triples from an already detrended SCG and known PPG apices."""
    pac = locate_pac(detrended_scg, ppg_peaks, config.pac_half_window_ms)
    points = decision_rules(detrended_scg, pac, rule_config(config), logger)
    triples = []
    for pts in points:
        if pts.m1 < pts.pks < pts.m2:
            triples.append(DiastoleTriple(ac=pts.m1, pac=pts.pks, mo=pts.m2))
        elif logger:
            logger.debug(f"Dropping diastole at pAC {pts.pks}: AC/MO not around it")
    return triples


def delineate_diastole(
    scg: SampledSignal,
    ppg: SampledSignal,
    config: Optional[DelineatorConfig] = None,
    logger: Optional[LoggerProtocol] = None,
) -> List[DiastoleTriple]:
    """
    Locate (AC, pAC, MO) for every beat with a detected PPG apex.

    The SCG is detrended internally; pAC is found around each PPG apex and
    AC/MO are the minima returned by the decision rules around pAC.

    Raises:
        InputError: If the channels are not synchronized or the record is
            shorter than 3 s
    """
    config = config or DelineatorConfig()
    check_synchronized(scg, ppg)
    detrended = highpass_detrend(scg, config.detrend_cutoff_hz, config.filter_order)
    peaks = detect_ppg_peaks(ppg, config)
    return diastole_from_detrended(detrended, peaks, config, logger)


def mask_intervals(
    beats: Sequence[Tuple[int, int, int]], guard: int, n: int
) -> List[Interval]:
    """
    Closed sample intervals [ac - guard, mo + guard], clipped and merged.
    """
    raw = sorted(
        (max(0, int(ac) - guard), min(n - 1, int(mo) + guard)) for ac, _, mo in beats
    )
    merged: List[Interval] = []
    for start, stop in raw:
        if merged and start <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], stop))
        else:
            merged.append((start, stop))
    return merged


def mask_diastole(
    scg: SampledSignal, beats: Sequence[Tuple[int, int, int]], guard_ms: float = 20.0
) -> SampledSignal:
    """
    Zero every diastole with a guard band on both sides.

    Overlapping regions merge; samples outside all regions are unchanged.

    Example:
        >>> masked = mask_diastole(scg, [DiastoleTriple(360, 400, 460)], guard_ms=20)
        >>> bool(np.all(masked.samples[340:481] == 0))
        True
    """
    if guard_ms < 0:
        raise ParameterError("guard_ms", guard_ms, "guard_ms >= 0")
    samples = scg.samples.copy()
    for start, stop in mask_intervals(beats, scg.ms_to_samples(guard_ms), len(scg)):
        samples[start : stop + 1] = 0.0
    return scg.with_samples(samples)


def masked_flags(intervals: Sequence[Interval], n: int) -> np.ndarray:
    """Boolean array marking every masked sample."""
    flags = np.zeros(n, dtype=bool)
    for start, stop in intervals:
        flags[start : stop + 1] = True
    return flags
