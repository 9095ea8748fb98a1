"""
Classifiers for the breathlessness detection task.

Importing this package registers every built-in kind with the
ClassifierRegistry.
"""

from .base import Classifier
from .registry import ClassifierRegistry

# Import the implementations to register them
from .knn import KnnClassifier
from .lda import LdaClassifier
from .svm import LinearSvmClassifier, RbfSvmClassifier, SvmClassifier

__all__ = [
    "Classifier",
    "ClassifierRegistry",
    "KnnClassifier",
    "LdaClassifier",
    "LinearSvmClassifier",
    "RbfSvmClassifier",
    "SvmClassifier",
]
