"""
Feature selection by two-sample t-tests.

Each column is tested with Welch's unequal-variance t-test between the
two classes; columns with p below alpha are kept. The fixed mode returns
the feature set {1, 2, 5, 6, 7, 9, 10, 11} regardless of the data.
"""

from enum import Enum
from typing import Dict, Optional, Tuple

import numpy as np
from scipy.stats import ttest_ind

from .features import FeatureMatrix
from ..core.errors import InputError
from ..core.interfaces import LoggerProtocol

FIXED_FEATURE_SET: Tuple[int, ...] = (1, 2, 5, 6, 7, 9, 10, 11)


class SelectionMode(str, Enum):
    ALL = "all"
    FIXED = "selected"
    TTEST = "ttest"


def feature_pvalues(
    X: FeatureMatrix, logger: Optional[LoggerProtocol] = None
) -> Dict[int, Optional[float]]:
    """
    Welch t-test p-value of every column (None when the test is skipped).

    A column with zero variance inside either class is skipped with a
    warning.

    Raises:
        InputError: If a class has fewer than 2 rows
    """
    a = X.values[X.labels == 0]
    b = X.values[X.labels == 1]
    if a.shape[0] < 2 or b.shape[0] < 2:
        raise InputError(
            f"t-test needs 2 rows per class, got {a.shape[0]} and {b.shape[0]}", "features"
        )

    pvalues: Dict[int, Optional[float]] = {}
    for column, number in enumerate(X.numbers):
        if np.ptp(a[:, column]) == 0.0 or np.ptp(b[:, column]) == 0.0:
            if logger:
                logger.warning(f"f{number}: zero within-class variance, t-test skipped")
            pvalues[number] = None
            continue
        pvalues[number] = float(ttest_ind(a[:, column], b[:, column], equal_var=False).pvalue)
    return pvalues


def select_features(
    X: FeatureMatrix,
    alpha: float = 0.05,
    mode: "SelectionMode | str" = SelectionMode.TTEST,
    logger: Optional[LoggerProtocol] = None,
) -> Tuple[int, ...]:
    """
    1-based feature numbers to keep.

    Args:
        X: Feature matrix with both classes
        alpha: Significance level of the t-test mode
        mode: "ttest", "selected" (the fixed set) or "all"
        logger: Receives skipped-column warnings

    Example:
        >>> select_features(X, mode="selected")
        (1, 2, 5, 6, 7, 9, 10, 11)
    """
    mode = SelectionMode(mode)
    if mode is SelectionMode.ALL:
        return tuple(X.numbers)
    if mode is SelectionMode.FIXED:
        return FIXED_FEATURE_SET

    pvalues = feature_pvalues(X, logger)
    selected = tuple(n for n, p in pvalues.items() if p is not None and p < alpha)
    if logger:
        logger.info(f"t-test (alpha={alpha}) selected {', '.join(f'f{n}' for n in selected) or 'nothing'}")
    return selected
