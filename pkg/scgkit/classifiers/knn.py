"""
k-nearest-neighbour classifiers.

``knn`` takes K from the parameters; ``knn-fine``, ``knn-medium`` and
``knn-coarse`` fix K to 5, 11 and 101. The score of a point is the
fraction of its K neighbours that are positive.
"""

import numpy as np
from sklearn.neighbors import KNeighborsClassifier

from .base import Classifier
from .registry import ClassifierRegistry


@ClassifierRegistry.register("knn")
@ClassifierRegistry.register("knn-fine", k=5)
@ClassifierRegistry.register("knn-medium", k=11)
@ClassifierRegistry.register("knn-coarse", k=101)
class KnnClassifier(Classifier):
    """
    Majority vote over the K nearest training points (Euclidean).

    K larger than the training set is clamped with a warning. Ties of an
    even K go to the negative class.
    """

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        k = int(self.params.get("k", 5))
        if k > X.shape[0]:
            if self.logger:
                self.logger.warning(
                    f"{self.kind}: K={k} exceeds {X.shape[0]} training rows, using K={X.shape[0]}"
                )
            k = X.shape[0]
        self.k_ = k
        self.model_ = KNeighborsClassifier(n_neighbors=k, weights="uniform")
        self.model_.fit(X, y)

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        return self.model_.predict_proba(X)[:, 1]

    def _labels_from_scores(self, scores: np.ndarray) -> np.ndarray:
        return (scores > 0.5).astype(int)
