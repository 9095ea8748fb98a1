"""
Classifier registry for plugin architecture.

This module provides a registry for discovering and creating
classifiers by kind name.

Example:
    >>> @ClassifierRegistry.register("my-classifier")
    ... class MyClassifier(Classifier):
    ...     ...
    >>>
    >>> # Later, create the classifier from its kind
    >>> model = ClassifierRegistry.create("svm-rbf", {"c": 1.0}, logger)
"""

from typing import Any, Dict, List, Optional, Type

from .base import Classifier
from ..core.errors import ConfigurationError


class ClassifierRegistry:
    """
    Registry for classifiers.

    Classifiers register themselves under one or more kind names and are
    created from a parameter dictionary. Variants such as ``knn-fine``
    register the same class with preset parameters.

    Example:
        >>> ClassifierRegistry.create("knn-fine").params["k"]
        5
    """

    _classifiers: Dict[str, Type[Classifier]] = {}
    _presets: Dict[str, Dict[str, Any]] = {}

    @classmethod
    def register(cls, kind: str, **preset: Any):
        """
        Decorator to register a classifier class.

        Args:
            kind: Kind name this classifier answers to
            **preset: Parameters fixed for this kind (override user params)

        Example:
            >>> @ClassifierRegistry.register("knn-medium", k=11)
            ... class KnnClassifier(Classifier):
            ...     pass
        """

        def decorator(classifier_cls: Type[Classifier]) -> Type[Classifier]:
            cls._classifiers[kind] = classifier_cls
            cls._presets[kind] = dict(preset)
            return classifier_cls

        return decorator

    @classmethod
    def get(cls, kind: str) -> Optional[Type[Classifier]]:
        return cls._classifiers.get(kind)

    @classmethod
    def create(
        cls,
        kind: str,
        params: Optional[Dict[str, Any]] = None,
        logger: Optional[Any] = None,
    ) -> Classifier:
        """
        Create an untrained classifier.

        Args:
            kind: Registered kind name
            params: Parameter dictionary
            logger: Logger instance

        Raises:
            ConfigurationError: If the kind is not registered
        """
        classifier_cls = cls.get(kind)
        if classifier_cls is None:
            raise ConfigurationError(
                f"unknown classifier (choose from {', '.join(cls.list_kinds())})",
                field="classifier",
                value=kind,
            )
        merged = dict(params or {})
        merged.update(cls._presets.get(kind, {}))
        classifier = classifier_cls(merged, logger)
        classifier.kind = kind
        return classifier

    @classmethod
    def list_kinds(cls) -> List[str]:
        """Registered kinds in registration order."""
        return list(cls._classifiers.keys())

    @classmethod
    def is_registered(cls, kind: str) -> bool:
        return kind in cls._classifiers

    @classmethod
    def unregister(cls, kind: str) -> bool:
        """Unregister a classifier (mainly for testing)."""
        if kind in cls._classifiers:
            del cls._classifiers[kind]
            cls._presets.pop(kind, None)
            return True
        return False
