"""
Base class for breathlessness classifiers.

This module provides the abstract base class shared by the SVM, kNN and
LDA classifiers: parameter handling, input checks and the common
``predict`` contract.

Labels are 0 (normal breathing) and 1 (breathlessness, the positive
class). Scores are real-valued and larger means more likely positive.

Example:
    >>> class MyClassifier(Classifier):
    ...     def _fit(self, X, y):
    ...         self.threshold_ = X[:, 0].mean()
    ...     def decision_scores(self, X):
    ...         return X[:, 0] - self.threshold_
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple, TYPE_CHECKING

import numpy as np

from ..core.errors import InputError, TrainingError

if TYPE_CHECKING:
    from ..core.interfaces import LoggerProtocol


class Classifier(ABC):
    """
    Abstract base class for binary classifiers.

    Subclasses should:
        1. Call super().__init__(params, logger) in their __init__
        2. Implement _fit() and decision_scores()
        3. Override _labels_from_scores() when the decision is not ``score > 0``

    Attributes:
        kind: Registered classifier kind (set by the registry)
        params: Parameter dictionary (c, gamma, k, ridge, ...)
        logger: Logger instance for warnings
        n_features: Feature dimension seen during training
    """

    kind: str = "unknown"

    def __init__(self, params: Optional[Dict[str, Any]] = None, logger: Optional["LoggerProtocol"] = None):
        self.params: Dict[str, Any] = dict(params or {})
        self.logger = logger
        self.n_features: Optional[int] = None

    def fit(self, X: np.ndarray, y: np.ndarray) -> "Classifier":
        """
        Train on a feature matrix.

        Args:
            X: (n_samples, n_features) matrix
            y: Labels in {0, 1}

        Returns:
            self

        Raises:
            TrainingError: If a class is missing or has fewer than 2 rows
        """
        X = np.asarray(X, dtype=np.float64)
        y = np.asarray(y).astype(int)
        if X.ndim != 2 or X.shape[0] != y.shape[0]:
            raise TrainingError(f"X {X.shape} does not match y {y.shape}", self.kind)
        counts = np.bincount(y, minlength=2)
        if counts.size != 2 or np.any(counts < 2):
            raise TrainingError(
                f"need two classes with at least 2 rows each, got counts {counts.tolist()}",
                self.kind,
            )
        self.n_features = X.shape[1]
        self._fit(X, y)
        return self

    def predict(self, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Predict labels and scores.

        Raises:
            TrainingError: If the classifier is not trained
            InputError: On a feature-dimension mismatch
        """
        X = self._check_input(X)
        scores = self.decision_scores(X)
        return self._labels_from_scores(scores), scores

    def _check_input(self, X: np.ndarray) -> np.ndarray:
        if self.n_features is None:
            raise TrainingError("classifier is not trained", self.kind)
        X = np.asarray(X, dtype=np.float64)
        if X.ndim == 1:
            X = X.reshape(1, -1)
        if X.shape[1] != self.n_features:
            raise InputError(
                f"expected {self.n_features} features, got {X.shape[1]}", "features"
            )
        return X

    def _labels_from_scores(self, scores: np.ndarray) -> np.ndarray:
        return (scores > 0).astype(int)

    @abstractmethod
    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        raise NotImplementedError

    @abstractmethod
    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        """Real-valued scores, larger meaning more likely positive."""
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(kind={self.kind!r}, params={self.params})"
