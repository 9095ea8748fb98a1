"""
Detection performance of the delineator against reference annotations.

Predictions are paired one-to-one with reference points by ascending
time distance; pairs farther apart than the tolerance are never made.
Sensitivity, positive predictivity and accuracy follow from the counts.

Example:
    >>> counts = match_detections([5012, 5020], [5000], tol_ms=50, fs=1000)
    >>> counts
    MatchCounts(tp=1, fp=1, fn=0)
    >>> detection_metrics(9, 1, 1).acc
    0.8181818181818182
"""

from dataclasses import asdict, dataclass
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence

import numpy as np

from ..core.errors import ParameterError
from ..core.types import FIDUCIALS, BeatAnnotation, ExtremaList

METRICS = ("se", "pp", "acc")


class MatchCounts(NamedTuple):
    tp: int
    fp: int
    fn: int


@dataclass(frozen=True)
class DetectionReport:
    """
    Detection counts and metrics of one fiducial.

    A metric whose denominator is zero is None rather than 0.

    Attributes:
        fiducial: Fiducial name ("ao", ...) or "" when not tied to one
        tp, fp, fn: Counts
        se: TP / (TP + FN)
        pp: TP / (TP + FP)
        acc: TP / (TP + FP + FN)
    """

    fiducial: str
    tp: int
    fp: int
    fn: int
    se: Optional[float]
    pp: Optional[float]
    acc: Optional[float]

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "DetectionReport":
        return detection_metrics(
            int(data["tp"]), int(data["fp"]), int(data["fn"]), str(data.get("fiducial", ""))
        )


def _ratio(numerator: int, denominator: int) -> Optional[float]:
    return None if denominator == 0 else numerator / denominator


def detection_metrics(tp: int, fp: int, fn: int, fiducial: str = "") -> DetectionReport:
    """
    Se, +P and Acc from detection counts.

    Raises:
        ParameterError: If a count is negative
    """
    for name, value in (("tp", tp), ("fp", fp), ("fn", fn)):
        if value < 0:
            raise ParameterError(name, value, ">= 0")
    return DetectionReport(
        fiducial=fiducial,
        tp=tp,
        fp=fp,
        fn=fn,
        se=_ratio(tp, tp + fn),
        pp=_ratio(tp, tp + fp),
        acc=_ratio(tp, tp + fp + fn),
    )


def match_detections(
    pred: "ExtremaList | Sequence[int]",
    truth: Sequence[int],
    tol_ms: float,
    fs: float,
) -> MatchCounts:
    """
    Greedy one-to-one matching of predicted and reference indices.

    Candidate pairs within ``tol_ms`` are taken in ascending order of
    distance (ties: earlier reference, then earlier prediction); each
    index is used at most once.

    Raises:
        ParameterError: If tol_ms <= 0
    """
    if tol_ms <= 0:
        raise ParameterError("tol_ms", tol_ms, "> 0")
    pred_idx = np.sort(np.asarray(list(pred), dtype=np.int64))
    truth_idx = np.sort(np.asarray(list(truth), dtype=np.int64))
    tol = tol_ms * fs / 1000.0

    lo = np.searchsorted(truth_idx, pred_idx - tol, side="left")
    hi = np.searchsorted(truth_idx, pred_idx + tol, side="right")
    pairs = [
        (abs(int(truth_idx[j]) - int(p)), j, i)
        for i, p in enumerate(pred_idx)
        for j in range(lo[i], hi[i])
    ]
    pairs.sort()

    used_pred = np.zeros(pred_idx.size, dtype=bool)
    used_truth = np.zeros(truth_idx.size, dtype=bool)
    tp = 0
    for _, j, i in pairs:
        if used_pred[i] or used_truth[j]:
            continue
        used_pred[i] = used_truth[j] = True
        tp += 1
    return MatchCounts(tp=tp, fp=int(pred_idx.size) - tp, fn=int(truth_idx.size) - tp)


def evaluate_beats(
    predicted: Iterable[BeatAnnotation],
    reference: Iterable[BeatAnnotation],
    tol_ms: float,
    fs: float,
) -> Dict[str, DetectionReport]:
    """Per-fiducial DetectionReport of an annotation list against a reference."""
    predicted = list(predicted)
    reference = list(reference)
    reports = {}
    for name in FIDUCIALS:
        pred = [getattr(b, name) for b in predicted if getattr(b, name) is not None]
        truth = [getattr(b, name) for b in reference if getattr(b, name) is not None]
        counts = match_detections(pred, truth, tol_ms, fs)
        reports[name] = detection_metrics(*counts, fiducial=name)
    return reports


@dataclass(frozen=True)
class MetricSummary:
    """Mean and sample standard deviation of one metric across records."""

    mean: Optional[float]
    sd: Optional[float]
    n: int


def summarize_reports(
    per_record: Sequence[Dict[str, DetectionReport]],
) -> Dict[str, Dict[str, MetricSummary]]:
    """
    Overall mean +/- sd of every metric across records.

    Records where a metric is undefined are left out of that metric's
    summary. The sd of a single value is 0.
    """
    summary: Dict[str, Dict[str, MetricSummary]] = {}
    for name in FIDUCIALS:
        summary[name] = {}
        for metric in METRICS:
            values: List[float] = [
                getattr(r[name], metric)
                for r in per_record
                if name in r and getattr(r[name], metric) is not None
            ]
            if not values:
                summary[name][metric] = MetricSummary(None, None, 0)
                continue
            sd = float(np.std(values, ddof=1)) if len(values) > 1 else 0.0
            summary[name][metric] = MetricSummary(float(np.mean(values)), sd, len(values))
    return summary
