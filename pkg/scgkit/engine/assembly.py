"""
Beat assembly: systole/diastole pairing, processing windows and the
deduplicating merge of per-window annotations.
"""

from typing import List, Sequence, Tuple

from ..core.types import BeatAnnotation
from .diastole import DiastoleTriple
from .systole import SystoleTriple


def pair_beats(
    systoles: Sequence[SystoleTriple],
    diastoles: Sequence[DiastoleTriple],
    fs: float,
) -> List[BeatAnnotation]:
    """
    Join each AO with the first following AC that precedes the next AO.

    Every AC is used at most once. Diastoles left without an AO are emitted
    with empty systole points; AOs left without an AC are dropped. A pair
    that would break the fiducial ordering keeps only its diastole.
    """
    systoles = sorted(systoles, key=lambda s: s.ao)
    diastoles = sorted(diastoles, key=lambda d: d.ac)
    used = [False] * len(diastoles)
    beats: List[BeatAnnotation] = []

    for i, sys in enumerate(systoles):
        next_ao = systoles[i + 1].ao if i + 1 < len(systoles) else None
        for j, dia in enumerate(diastoles):
            if used[j] or dia.ac <= sys.ao:
                continue
            if next_ao is not None and dia.ac >= next_ao:
                break
            beat = BeatAnnotation.build(
                fs, im=sys.im, ao=sys.ao, ic=sys.ic, ac=dia.ac, pac=dia.pac, mo=dia.mo
            )
            if beat.is_ordered():
                used[j] = True
                beats.append(beat)
            break

    for j, dia in enumerate(diastoles):
        if not used[j]:
            beats.append(BeatAnnotation.build(fs, ac=dia.ac, pac=dia.pac, mo=dia.mo))

    return sorted(beats, key=_position)


def _position(beat: BeatAnnotation) -> int:
    return next(v for v in beat.points().values() if v is not None)


def _completeness(beat: BeatAnnotation) -> int:
    return sum(v is not None for v in beat.points().values())


def window_bounds(n: int, window: int, overlap: int) -> List[Tuple[int, int]]:
    """
    Half-open [start, stop) windows of ``window`` samples overlapping by
    ``overlap``; the last window is shifted to end at ``n``. A record no
    longer than one window is a single window.

    Example:
        >>> window_bounds(25000, 10000, 1000)
        [(0, 10000), (9000, 19000), (15000, 25000)]
    """
    if n <= window:
        return [(0, n)]
    step = window - overlap
    bounds = []
    start = 0
    while start + window < n:
        bounds.append((start, start + window))
        start += step
    bounds.append((n - window, n))
    return bounds


def _duplicates(a: BeatAnnotation, b: BeatAnnotation, tolerance: int) -> bool:
    for name in ("ao", "pac"):
        va, vb = getattr(a, name), getattr(b, name)
        if va is not None and vb is not None and abs(va - vb) < tolerance:
            return True
    return False


def merge_windows(
    per_window: Sequence[Sequence[BeatAnnotation]], tolerance: int
) -> List[BeatAnnotation]:
    """
    Merge record-indexed beats from consecutive windows.

    Beats whose AO (or pAC) lie closer than ``tolerance`` samples are
    duplicates; the more complete one wins, then the one from the earlier
    window. The result is ordered by time.
    """
    candidates = [
        (-_completeness(beat), w, _position(beat), beat)
        for w, beats in enumerate(per_window)
        for beat in beats
    ]
    candidates.sort(key=lambda c: c[:3])

    kept: List[BeatAnnotation] = []
    for _, _, _, beat in candidates:
        if not any(_duplicates(beat, other, tolerance) for other in kept):
            kept.append(beat)
    return sorted(kept, key=_position)
