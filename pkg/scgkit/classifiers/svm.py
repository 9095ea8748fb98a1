"""
Support vector machines with RBF and linear kernels.

Training solves the soft-margin dual by sequential minimal optimization
(libsvm through scikit-learn's SVC) with a KKT violation tolerance of
1e-3. Scores are signed distances to the decision boundary.
"""

from typing import Optional

import numpy as np
from sklearn.svm import SVC

from .base import Classifier
from .registry import ClassifierRegistry

SMO_TOLERANCE = 1e-3


class SvmClassifier(Classifier):
    """
    Soft-margin SVM.

    Params:
        c: Box constraint C (default 1.0)
        gamma: RBF width; None means 1 / n_features
    """

    kernel: str = "rbf"

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        gamma: Optional[float] = self.params.get("gamma")
        self.model_ = SVC(
            kernel=self.kernel,
            C=float(self.params.get("c", 1.0)),
            gamma="auto" if gamma is None else float(gamma),
            tol=SMO_TOLERANCE,
        )
        self.model_.fit(X, y)

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        # classes_ is [0, 1], so positive distances point to class 1
        return self.model_.decision_function(X)

    @property
    def dual_coefficients(self) -> np.ndarray:
        """Multipliers alpha_i of the support vectors, each in [0, C]."""
        return np.abs(self.model_.dual_coef_.ravel())

    @property
    def support_vectors(self) -> np.ndarray:
        return self.model_.support_vectors_


@ClassifierRegistry.register("svm-rbf")
class RbfSvmClassifier(SvmClassifier):
    kernel = "rbf"


@ClassifierRegistry.register("svm-linear")
class LinearSvmClassifier(SvmClassifier):
    kernel = "linear"
