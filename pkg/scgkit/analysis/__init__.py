"""
scgkit Analysis Module.

Detection performance of the delineator, per-beat feature extraction,
t-test feature selection, classifier cross-validation and ROC analysis.

Example:
    >>> from scgkit.analysis import evaluate_beats
    >>> reports = evaluate_beats(beats, truth.beats, tol_ms=50, fs=1000)
    >>> reports["ao"].se
    1.0
"""

from .dataset import ClassificationRun, LabeledRecord, build_feature_dataset, run_classification
from .detection import (
    DetectionReport,
    MatchCounts,
    MetricSummary,
    detection_metrics,
    evaluate_beats,
    match_detections,
    summarize_reports,
)
from .features import FEATURE_DESCRIPTIONS, FEATURE_NAMES, FeatureMatrix, extract_features
from .selection import FIXED_FEATURE_SET, SelectionMode, feature_pvalues, select_features
from .validation import (
    CLASSIFIER_ORDER,
    ClassificationMetrics,
    CrossValidationResult,
    MeanSd,
    RocCurve,
    classification_metrics,
    classifier_params,
    cross_validate,
    predict,
    roc_curve,
    train_classifier,
)

__all__ = [
    "ClassificationRun",
    "LabeledRecord",
    "build_feature_dataset",
    "run_classification",
    "DetectionReport",
    "MatchCounts",
    "MetricSummary",
    "detection_metrics",
    "evaluate_beats",
    "match_detections",
    "summarize_reports",
    "FEATURE_DESCRIPTIONS",
    "FEATURE_NAMES",
    "FeatureMatrix",
    "extract_features",
    "FIXED_FEATURE_SET",
    "SelectionMode",
    "feature_pvalues",
    "select_features",
    "CLASSIFIER_ORDER",
    "ClassificationMetrics",
    "CrossValidationResult",
    "MeanSd",
    "RocCurve",
    "classification_metrics",
    "classifier_params",
    "cross_validate",
    "predict",
    "roc_curve",
    "train_classifier",
]
