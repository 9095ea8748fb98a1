"""
Classifier training, stratified k-fold cross-validation and ROC analysis.

Example:
    >>> result = cross_validate(X.values, X.labels, k=10, kind="svm-rbf", seed=0)
    >>> result.mean.acc
    0.98
    >>> curve = roc_curve(result.scores, result.labels)
    >>> curve.auc
    0.999
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sklearn import metrics
from sklearn.model_selection import StratifiedGroupKFold, StratifiedKFold

from ..classifiers import Classifier, ClassifierRegistry
from ..core.config import DelineatorConfig
from ..core.errors import InputError
from ..core.interfaces import LoggerProtocol

CLASSIFIER_ORDER: Tuple[str, ...] = (
    "svm-rbf",
    "svm-linear",
    "knn-fine",
    "knn-medium",
    "knn-coarse",
    "lda",
)
"""Classifiers compared by ``--classifier all``, in table order."""


def classifier_params(config: DelineatorConfig) -> Dict[str, Any]:
    """Classifier parameters taken from the configuration."""
    return {
        "c": config.svm_c,
        "gamma": config.svm_gamma,
        "k": config.knn_k,
        "ridge": config.lda_ridge,
    }


def train_classifier(
    kind: str,
    X: np.ndarray,
    y: np.ndarray,
    params: Optional[Dict[str, Any]] = None,
    logger: Optional[LoggerProtocol] = None,
) -> Classifier:
    """Create and fit a registered classifier."""
    return ClassifierRegistry.create(kind, params, logger).fit(X, y)


def predict(model: Classifier, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Labels and scores of a trained classifier."""
    return model.predict(X)


@dataclass(frozen=True)
class ClassificationMetrics:
    """
    ACC, TPR and FPR of one confusion matrix (None on a zero denominator).

    Breathlessness (label 1) is the positive class.
    """

    acc: Optional[float]
    tpr: Optional[float]
    fpr: Optional[float]
    tp: int = 0
    tn: int = 0
    fp: int = 0
    fn: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "acc": self.acc,
            "tpr": self.tpr,
            "fpr": self.fpr,
            "tp": self.tp,
            "tn": self.tn,
            "fp": self.fp,
            "fn": self.fn,
        }


def _ratio(numerator: int, denominator: int) -> Optional[float]:
    return None if denominator == 0 else numerator / denominator


def classification_metrics(y_true: Sequence[int], y_pred: Sequence[int]) -> ClassificationMetrics:
    """
    Metrics from true and predicted labels.

    Example:
        >>> classification_metrics([1, 1, 0, 0], [1, 0, 0, 1]).acc
        0.5
    """
    tn, fp, fn, tp = (
        int(v) for v in metrics.confusion_matrix(y_true, y_pred, labels=[0, 1]).ravel()
    )
    return ClassificationMetrics(
        acc=_ratio(tp + tn, tp + tn + fp + fn),
        tpr=_ratio(tp, tp + fn),
        fpr=_ratio(fp, tn + fp),
        tp=tp,
        tn=tn,
        fp=fp,
        fn=fn,
    )


@dataclass(frozen=True)
class MeanSd:
    mean: Optional[float]
    sd: Optional[float]

    @classmethod
    def of(cls, values: Sequence[Optional[float]]) -> "MeanSd":
        present = [v for v in values if v is not None]
        if not present:
            return cls(None, None)
        sd = float(np.std(present, ddof=1)) if len(present) > 1 else 0.0
        return cls(float(np.mean(present)), sd)


@dataclass
class CrossValidationResult:
    """
    Outcome of a k-fold cross-validation.

    Attributes:
        kind: Classifier kind
        folds: Metrics of every test fold
        scores: Out-of-fold decision scores, in input row order
        labels: True labels, in input row order
        fold_of: Test fold index of every row
    """

    kind: str
    folds: List[ClassificationMetrics] = field(default_factory=list)
    scores: np.ndarray = field(default_factory=lambda: np.empty(0))
    labels: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=int))
    fold_of: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=int))

    def summary(self) -> Dict[str, MeanSd]:
        return {
            name: MeanSd.of([getattr(f, name) for f in self.folds])
            for name in ("acc", "tpr", "fpr")
        }

    @property
    def mean(self) -> ClassificationMetrics:
        summary = self.summary()
        return ClassificationMetrics(
            acc=summary["acc"].mean, tpr=summary["tpr"].mean, fpr=summary["fpr"].mean
        )


def _splitter(
    y: np.ndarray, k: int, seed: int, groups: Optional[np.ndarray]
):
    if groups is None:
        counts = np.bincount(y, minlength=2)
        if np.any(counts < k):
            raise InputError(f"each class needs at least k={k} rows, got {counts.tolist()}")
        return StratifiedKFold(n_splits=k, shuffle=True, random_state=seed).split(
            np.zeros(y.size), y
        )
    for label in (0, 1):
        n_groups = len(set(groups[y == label]))
        if n_groups < k:
            raise InputError(
                f"record-level CV needs at least k={k} records per class, class {label} has {n_groups}"
            )
    return StratifiedGroupKFold(n_splits=k, shuffle=True, random_state=seed).split(
        np.zeros(y.size), y, groups
    )


def cross_validate(
    X: np.ndarray,
    y: np.ndarray,
    k: int = 10,
    kind: str = "svm-rbf",
    params: Optional[Dict[str, Any]] = None,
    seed: int = 0,
    groups: Optional[Sequence[Any]] = None,
    logger: Optional[LoggerProtocol] = None,
) -> CrossValidationResult:
    """
    Stratified k-fold cross-validation with a seeded shuffle.

    Args:
        X: (n_rows, n_features) matrix
        y: Labels in {0, 1}
        k: Number of folds (>= 2)
        kind: Registered classifier kind
        params: Classifier parameters
        seed: Shuffle seed; equal seeds give equal folds
        groups: Record of every row; when given, folds never split a record
        logger: Logger instance

    Raises:
        InputError: If a class has fewer than k rows (or k records)
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=int)
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    group_array = None if groups is None else np.asarray(groups, dtype=object)

    result = CrossValidationResult(
        kind=kind,
        scores=np.zeros(y.size),
        labels=y.copy(),
        fold_of=np.full(y.size, -1, dtype=int),
    )
    for fold, (train, test) in enumerate(_splitter(y, k, seed, group_array)):
        model = train_classifier(kind, X[train], y[train], params, logger)
        predicted, scores = model.predict(X[test])
        result.scores[test] = scores
        result.fold_of[test] = fold
        result.folds.append(classification_metrics(y[test], predicted))

    if logger:
        mean = result.mean
        logger.debug(f"{kind}: {k}-fold ACC {mean.acc}, TPR {mean.tpr}, FPR {mean.fpr}")
    return result


@dataclass(frozen=True)
class RocCurve:
    """ROC points ordered by decreasing threshold, with the trapezoidal AUC."""

    fpr: np.ndarray
    tpr: np.ndarray
    thresholds: np.ndarray
    auc: float

    def points(self) -> List[Tuple[float, float]]:
        return [(float(f), float(t)) for f, t in zip(self.fpr, self.tpr)]


def roc_curve(scores: Sequence[float], labels: Sequence[int]) -> RocCurve:
    """
    Sweep a threshold over every unique score.

    Raises:
        InputError: If only one class is present

    Example:
        >>> roc_curve([0.1, 0.4, 0.35, 0.8], [0, 0, 1, 1]).auc
        0.75
    """
    labels = np.asarray(labels, dtype=int)
    if np.unique(labels).size < 2:
        raise InputError("ROC needs both classes")
    fpr, tpr, thresholds = metrics.roc_curve(
        labels, np.asarray(scores, dtype=np.float64), pos_label=1, drop_intermediate=False
    )
    return RocCurve(fpr=fpr, tpr=tpr, thresholds=thresholds, auc=float(metrics.auc(fpr, tpr)))
