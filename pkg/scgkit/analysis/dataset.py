"""
Record-set analysis: delineate every record, pool the features and
compare classifiers on common folds.

Example:
    >>> features = build_feature_dataset(records, config)
    >>> run = run_classification(features, ["svm-rbf"], "selected", config)
    >>> run.results["svm-rbf"].mean.acc
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .features import FeatureMatrix, extract_features
from .selection import select_features
from .validation import CrossValidationResult, RocCurve, classifier_params, cross_validate, roc_curve
from ..core.config import DelineatorConfig
from ..core.errors import InputError
from ..core.interfaces import LoggerProtocol
from ..core.types import SampledSignal
from ..dsp.filters import highpass_detrend
from ..engine.delineator import Delineator


class LabeledRecord(NamedTuple):
    name: str
    scg: SampledSignal
    ppg: SampledSignal
    label: int


def build_feature_dataset(
    records: Iterable[LabeledRecord],
    config: Optional[DelineatorConfig] = None,
    logger: Optional[LoggerProtocol] = None,
) -> FeatureMatrix:
    """
    Pooled, min-max normalized feature matrix of a record set.

    Records are processed in the given order. Amplitudes are read from
    the baseline-removed SCG. A record with fewer than 2 complete beats
    contributes no rows and is reported as a warning.
    """
    config = config or DelineatorConfig()
    delineator = Delineator(config=config, logger=logger)
    logger = delineator.logger

    matrices: List[FeatureMatrix] = []
    for record in records:
        beats = delineator.delineate(record.scg, record.ppg)
        detrended = highpass_detrend(record.scg, config.detrend_cutoff_hz, config.filter_order)
        try:
            matrix = extract_features(
                beats,
                detrended,
                label=record.label,
                group=record.name,
                segment_s=config.feature_segment_s,
                normalize=False,
            )
        except InputError as e:
            logger.warning(f"{record.name}: no features ({e})")
            continue
        logger.info(f"{record.name}: {matrix.n_rows} feature rows")
        matrices.append(matrix)

    pooled = FeatureMatrix.concatenate(matrices)
    return pooled.normalized()


@dataclass
class ClassificationRun:
    """
    Cross-validation of several classifiers on one feature selection.

    Attributes:
        selected: 1-based feature numbers used
        results: Cross-validation result per classifier kind
        roc: ROC curve of the pooled out-of-fold scores per kind
    """

    feature_mode: str
    selected: Tuple[int, ...]
    results: Dict[str, CrossValidationResult] = field(default_factory=dict)
    roc: Dict[str, RocCurve] = field(default_factory=dict)


def run_classification(
    features: FeatureMatrix,
    kinds: Sequence[str],
    feature_mode: str,
    config: Optional[DelineatorConfig] = None,
    logger: Optional[LoggerProtocol] = None,
) -> ClassificationRun:
    """
    Select features, then cross-validate every classifier on the same folds.

    Raises:
        InputError: If only one class is present, a class is smaller than
            k_folds, or the selection keeps no feature
    """
    config = config or DelineatorConfig()
    if len(set(features.labels.tolist())) < 2:
        raise InputError("classification needs records of both classes")

    selected = select_features(features, config.ttest_alpha, feature_mode, logger)
    if not selected:
        raise InputError("feature selection kept no feature")
    X = features.select(selected)
    groups = X.groups if config.cv_unit == "record" else None

    run = ClassificationRun(feature_mode=feature_mode, selected=selected)
    params = classifier_params(config)
    for kind in kinds:
        result = cross_validate(
            X.values, X.labels, config.k_folds, kind, params, config.seed, groups, logger
        )
        run.results[kind] = result
        run.roc[kind] = roc_curve(result.scores, result.labels)
    return run
