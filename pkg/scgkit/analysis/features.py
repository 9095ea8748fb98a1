"""
Per-beat features for breathlessness classification.

Twelve features are taken from every completely delineated beat:

    f1       heart rate from the AO-AO interval to the next beat (bpm)
    f2..f6   timing of AO, IC, AC, pAC and MO relative to IM (ms)
    f7..f12  SCG amplitude at IM, AO, IC, AC, pAC and MO divided by the
             largest absolute SCG value of the beat (IM to MO)

Feature numbers are 1-based throughout, matching the names f1..f12.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
from sklearn.preprocessing import minmax_scale

from ..core.errors import InputError
from ..core.types import FIDUCIALS, BeatAnnotation, SampledSignal

N_FEATURES = 12

FEATURE_NAMES: tuple = tuple(f"f{i}" for i in range(1, N_FEATURES + 1))

FEATURE_DESCRIPTIONS: Dict[str, str] = {
    "f1": "HR (bpm, AO-AO)",
    "f2": "AO - IM (ms)",
    "f3": "IC - IM (ms)",
    "f4": "AC - IM (ms)",
    "f5": "pAC - IM (ms)",
    "f6": "MO - IM (ms)",
    "f7": "amplitude at IM",
    "f8": "amplitude at AO",
    "f9": "amplitude at IC",
    "f10": "amplitude at AC",
    "f11": "amplitude at pAC",
    "f12": "amplitude at MO",
}

MAX_AO_INTERVAL_S = 2.0


@dataclass
class FeatureMatrix:
    """
    Beats by features, with per-row class labels and record groups.

    Attributes:
        values: (n_beats, n_columns) array
        labels: Class per row (0 normal, 1 breathless)
        groups: Record name per row (used by record-level CV)
        numbers: 1-based feature numbers of the columns
    """

    values: np.ndarray
    labels: np.ndarray
    groups: np.ndarray
    numbers: tuple = field(default=tuple(range(1, N_FEATURES + 1)))

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64).reshape(-1, len(self.numbers))
        self.labels = np.asarray(self.labels, dtype=int).reshape(-1)
        self.groups = np.asarray(self.groups, dtype=object).reshape(-1)
        if not (self.values.shape[0] == self.labels.size == self.groups.size):
            raise InputError("values, labels and groups must have the same number of rows")

    @property
    def n_rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def names(self) -> List[str]:
        return [f"f{n}" for n in self.numbers]

    def select(self, numbers: Sequence[int]) -> "FeatureMatrix":
        """Keep the given 1-based feature numbers, in the given order."""
        missing = [n for n in numbers if n not in self.numbers]
        if missing:
            raise InputError(f"features {missing} are not in the matrix")
        columns = [self.numbers.index(n) for n in numbers]
        return FeatureMatrix(self.values[:, columns], self.labels, self.groups, tuple(numbers))

    def normalized(self) -> "FeatureMatrix":
        """Per-column min-max scaling to [0, 1]; constant columns become 0."""
        if self.n_rows == 0:
            return self
        return FeatureMatrix(
            minmax_scale(self.values, axis=0), self.labels, self.groups, self.numbers
        )

    def class_statistics(self) -> Dict[int, Dict[str, np.ndarray]]:
        """Per-class mean and sample sd of every column."""
        stats = {}
        for label in (0, 1):
            rows = self.values[self.labels == label]
            sd = rows.std(axis=0, ddof=1) if rows.shape[0] > 1 else np.zeros(rows.shape[1])
            stats[label] = {
                "n": rows.shape[0],
                "mean": rows.mean(axis=0) if rows.shape[0] else np.full(rows.shape[1], np.nan),
                "sd": sd,
            }
        return stats

    @classmethod
    def concatenate(cls, matrices: Sequence["FeatureMatrix"]) -> "FeatureMatrix":
        if not matrices:
            return cls(np.empty((0, N_FEATURES)), np.empty(0), np.empty(0))
        numbers = matrices[0].numbers
        return cls(
            np.vstack([m.values for m in matrices]),
            np.concatenate([m.labels for m in matrices]),
            np.concatenate([m.groups for m in matrices]),
            numbers,
        )


def beat_features(
    beat: BeatAnnotation, next_ao: int, scg: np.ndarray, fs: float
) -> Optional[np.ndarray]:
    """Raw feature vector of one complete beat, or None if it cannot be formed."""
    points = [getattr(beat, name) for name in FIDUCIALS]
    if any(p is None for p in points) or next_ao <= beat.ao:
        return None
    if beat.mo >= scg.size or beat.im < 0:
        return None
    rr_s = (next_ao - beat.ao) / fs
    if rr_s > MAX_AO_INTERVAL_S:
        return None

    peak = float(np.max(np.abs(scg[beat.im : beat.mo + 1])))
    if peak == 0.0:
        return None

    hr = 60.0 / rr_s
    timings = [(p - beat.im) * 1000.0 / fs for p in points[1:]]
    amplitudes = [scg[p] / peak for p in points]
    return np.array([hr, *timings, *amplitudes], dtype=np.float64)


def extract_features(
    beats: Sequence[BeatAnnotation],
    scg: SampledSignal,
    label: int = 0,
    group: str = "",
    segment_s: Optional[float] = None,
    normalize: bool = True,
) -> FeatureMatrix:
    """
    Feature matrix of a record.

    Beats with a missing fiducial are dropped, as is the last beat (no
    following AO) and any beat whose AO-AO interval exceeds 2 s (a beat
    was lost in between). With ``segment_s`` only beats ending before
    that time are used.

    Args:
        beats: Time-ordered annotations
        scg: SCG the amplitudes are read from (baseline removed)
        label: Class of every row
        group: Record name of every row
        segment_s: Analysis segment from the record start (None: whole record)
        normalize: Apply per-column min-max scaling

    Raises:
        InputError: If fewer than 2 complete beats are given
    """
    complete = [b for b in beats if b.is_complete]
    if len(complete) < 2:
        raise InputError(f"need at least 2 complete beats, got {len(complete)}", scg.label)

    limit = None if segment_s is None else int(round(segment_s * scg.fs))
    with_ao = [b for b in beats if b.ao is not None]
    rows = []
    for current, following in zip(with_ao, with_ao[1:]):
        if not current.is_complete:
            continue
        if limit is not None and current.mo >= limit:
            break
        row = beat_features(current, following.ao, scg.samples, scg.fs)
        if row is not None:
            rows.append(row)

    values = np.array(rows).reshape(-1, N_FEATURES)
    matrix = FeatureMatrix(values, np.full(len(rows), label), np.full(len(rows), group, dtype=object))
    return matrix.normalized() if normalize else matrix
