"""
Amplitude-histogram decision rules.

Around every reference peak ``pks`` two blocks are examined: block A
covers the ``block_a_ms`` before the peak and block B the ``block_b_ms``
after it (both closed intervals that include ``pks``). Within each block:

1. the strict local maxima of the block (its endpoints excluded) are
   binned by amplitude relative to ``x[pks]`` into (low, high] percent bins;
2. bins are scanned in configured order and the first non-empty one
   gives ``P1``, its member nearest in time to ``pks``;
3. the minimum of ``x`` on the closed segment between ``P1`` and ``pks``
   is the delineated point.

A block without binned maxima falls back to its far boundary as ``P1``.
Maxima are only binned when ``x[pks] > 0``.
"""

from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..core.interfaces import LoggerProtocol
from ..core.types import DecisionRuleConfig, SampledSignal
from ..dsp.extrema import extrema_indices

Interval = Tuple[int, int]


class RulePoints(NamedTuple):
    """Reference peak and the minima found before (m1) and after (m2) it."""
    pks: int
    m1: int
    m2: int


def bin_index(ratio_pct: float, bin_edges: Sequence[Tuple[float, float]]) -> Optional[int]:
    """Position of the first (low, high] bin holding ``ratio_pct``, or None."""
    for i, (lo, hi) in enumerate(bin_edges):
        if lo < ratio_pct <= hi:
            return i
    return None


def _select_p1(
    x: np.ndarray,
    pks: int,
    start: int,
    stop: int,
    far: int,
    cfg: DecisionRuleConfig,
) -> int:
    maxima = extrema_indices(x[start : stop + 1]) + start
    reference = x[pks]
    if maxima.size == 0 or reference <= 0.0:
        return far

    bins: List[List[int]] = [[] for _ in range(cfg.n_bins)]
    for idx in maxima:
        slot = bin_index(x[idx] / reference * 100.0, cfg.bin_edges)
        if slot is not None:
            bins[slot].append(int(idx))

    for members in bins:
        if members:
            # nearest in time, earlier sample on equal distance
            return min(members, key=lambda i: (abs(i - pks), i))
    return far


def _segment_argmin(x: np.ndarray, a: int, b: int) -> int:
    lo, hi = min(a, b), max(a, b)
    return lo + int(np.argmin(x[lo : hi + 1]))


def _clip_to_unmasked(
    pks: int, start: int, stop: int, masked: Sequence[Interval]
) -> Tuple[int, int]:
    for m_start, m_stop in masked:
        if m_stop < pks:
            start = max(start, m_stop + 1)
        elif m_start > pks:
            stop = min(stop, m_start - 1)
    return start, stop


def decision_rules(
    x: SampledSignal,
    pks: Iterable[int],
    cfg: Optional[DecisionRuleConfig] = None,
    logger: Optional[LoggerProtocol] = None,
    masked: Optional[Sequence[Interval]] = None,
) -> List[RulePoints]:
    """
    Delineate the minima on both sides of each reference peak.

    Args:
        x: Signal to delineate (detrended SCG, possibly masked)
        pks: Reference peak indices (pAC for diastole, AO for systole)
        cfg: Block lengths and amplitude bins
        logger: Receives a warning for every skipped peak
        masked: Closed masked intervals; blocks are truncated so they never
            reach into them

    Returns:
        One RulePoints per reference peak whose nominal blocks fit in the
        record, in input order

    Example:
        >>> sig = SampledSignal([0, 0.3, 0.1, 0.5, -0.2, 1.0, 0.2, -0.4, 0.6, 0.0], 1000.0)
        >>> decision_rules(sig, [5], DecisionRuleConfig(block_a_ms=5, block_b_ms=4))
        [RulePoints(pks=5, m1=4, m2=7)]
    """
    cfg = cfg or DecisionRuleConfig()
    masked = sorted(masked or [])
    samples = x.samples
    n = len(x)
    len_a = x.ms_to_samples(cfg.block_a_ms)
    len_b = x.ms_to_samples(cfg.block_b_ms)

    points: List[RulePoints] = []
    for peak in pks:
        peak = int(peak)
        if peak - len_a < 0 or peak + len_b > n - 1:
            if logger:
                logger.warning(
                    f"Skipping reference peak at sample {peak}: blocks "
                    f"[-{cfg.block_a_ms:g}, +{cfg.block_b_ms:g}] ms leave the record"
                )
            continue

        a_start, b_stop = _clip_to_unmasked(peak, peak - len_a, peak + len_b, masked)

        p1_a = _select_p1(samples, peak, a_start, peak, a_start, cfg)
        p1_b = _select_p1(samples, peak, peak, b_stop, b_stop, cfg)
        points.append(
            RulePoints(
                pks=peak,
                m1=_segment_argmin(samples, p1_a, peak),
                m2=_segment_argmin(samples, peak, p1_b),
            )
        )
    return points
