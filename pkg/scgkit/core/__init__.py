"""
scgkit Core Module.

This module contains the configuration, types, interfaces, and error
classes shared by every processing layer.

Components:
    - DelineatorConfig: Load and manage pipeline configuration
    - Types: signal, extrema and annotation dataclasses plus JSON TypedDicts
    - Interfaces: the logger Protocol used for dependency injection
    - Errors: Custom exception classes

Example:
    >>> from scgkit.core import DelineatorConfig, InputError
    >>>
    >>> config = DelineatorConfig.load("scgkit.yaml")
    >>> print(f"Window length: {config.window_s} s")
"""

# Configuration
from .config import DEFAULTS, DelineatorConfig

# Errors
from .errors import (
    ConfigurationError,
    DegenerateInputError,
    InputError,
    ParameterError,
    ParseError,
    ScgKitError,
    TrainingError,
)

# Interfaces
from .interfaces import (
    LoggerProtocol,
)

# Types
from .types import (
    FIDUCIAL_LABELS,
    FIDUCIALS,
    AnnotationBeatDict,
    AnnotationFileDict,
    AnnotationMetaDict,
    BeatAnnotation,
    DecisionRuleConfig,
    ExtremaKind,
    ExtremaList,
    SampledSignal,
    TruthFileDict,
)

# Events
from .events import (
    DelineationStage,
    EventStatus,
    DelineationEvent,
    EventEmitter,
    DelineationEventCollector,
    EventCallback,
)

__all__ = [
    # Configuration
    "DEFAULTS",
    "DelineatorConfig",
    # Errors
    "ScgKitError",
    "ParameterError",
    "InputError",
    "DegenerateInputError",
    "ConfigurationError",
    "ParseError",
    "TrainingError",
    # Interfaces
    "LoggerProtocol",
    # Types
    "FIDUCIALS",
    "FIDUCIAL_LABELS",
    "SampledSignal",
    "ExtremaKind",
    "ExtremaList",
    "BeatAnnotation",
    "DecisionRuleConfig",
    "AnnotationBeatDict",
    "AnnotationMetaDict",
    "AnnotationFileDict",
    "TruthFileDict",
    # Events
    "DelineationStage",
    "EventStatus",
    "DelineationEvent",
    "EventEmitter",
    "DelineationEventCollector",
    "EventCallback",
]
