"""
Linear discriminant analysis with a ridge-regularized pooled covariance.
"""

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .base import Classifier
from .registry import ClassifierRegistry
from ..core.errors import TrainingError


@ClassifierRegistry.register("lda")
class LdaClassifier(Classifier):
    """
    Two-class Gaussian LDA.

    The score is the log-odds ``w.x + b`` with
    ``w = S^-1 (mu_1 - mu_0)`` and ``b = -w.(mu_0 + mu_1)/2 + log(pi_1/pi_0)``,
    where S is the pooled within-class covariance plus ``ridge`` on the
    diagonal. sklearn's LinearDiscriminantAnalysis offers no fixed ridge
    (its shrinkage blends S towards a scaled identity) and falls back to a
    pseudo-inverse instead of failing, hence the Cholesky solve here.

    Params:
        ridge: Diagonal regularization (default 1e-6)

    Raises:
        TrainingError: If the regularized covariance is not positive definite
    """

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        ridge = float(self.params.get("ridge", 1e-6))
        X0, X1 = X[y == 0], X[y == 1]
        self.means_ = np.vstack([X0.mean(axis=0), X1.mean(axis=0)])
        self.priors_ = np.array([len(X0), len(X1)], dtype=np.float64) / len(X)

        scatter = (X0 - self.means_[0]).T @ (X0 - self.means_[0])
        scatter += (X1 - self.means_[1]).T @ (X1 - self.means_[1])
        covariance = scatter / (len(X) - 2) + ridge * np.eye(X.shape[1])
        self.covariance_ = covariance

        try:
            factor = cho_factor(covariance)
        except LinAlgError as e:
            raise TrainingError(f"pooled covariance is singular after ridge {ridge}: {e}", self.kind)

        self.coef_ = cho_solve(factor, self.means_[1] - self.means_[0])
        self.intercept_ = float(
            -self.coef_ @ (self.means_[0] + self.means_[1]) / 2.0
            + np.log(self.priors_[1] / self.priors_[0])
        )

    def decision_scores(self, X: np.ndarray) -> np.ndarray:
        return X @ self.coef_ + self.intercept_
