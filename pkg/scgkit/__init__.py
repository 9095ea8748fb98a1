"""
scgkit - PPG-guided fiducial point delineation of seismocardiograms

Locates the six mechanical events of every heartbeat in an SCG record
(IM, AO, IC in systole; AC, pAC, MO in diastole) with the help of a
synchronized PPG:
- Zero-phase Butterworth detrending and band-pass filtering
- Gaus-2 CWT scalogram and maximum relative wavelet energy
- Sigmoid-like envelope transfer with impulse-peak detection
- Amplitude-histogram decision rules around reference peaks
- Windowed delineation pipeline with event streaming
- Synthetic records with exact ground truth
- Detection metrics, feature extraction and breathlessness classification

Example:
    >>> from scgkit import Delineator, SynthConfig, generate
    >>> record = generate(SynthConfig(seed=1))
    >>> beats = Delineator().delineate(record.scg, record.ppg)
    >>> beats[0].lvet_ms
"""

__version__ = "0.1.0"

# Core module - configuration, types, interfaces, errors
from .core import (
    # Configuration
    DEFAULTS,
    DelineatorConfig,
    # Errors
    ScgKitError,
    ParameterError,
    InputError,
    DegenerateInputError,
    ConfigurationError,
    ParseError,
    TrainingError,
    # Interfaces
    LoggerProtocol,
    # Types
    FIDUCIALS,
    FIDUCIAL_LABELS,
    SampledSignal,
    ExtremaKind,
    ExtremaList,
    BeatAnnotation,
    DecisionRuleConfig,
)

# Delineation engine
from .engine import Delineator, delineate, decision_rules, detect_ppg_peaks

# Logging
from .log import PipelineLogger, LogLevel

# Events
from .events import (
    DelineationStage,
    EventStatus,
    DelineationEvent,
    EventEmitter,
    DelineationEventCollector,
)

# Synthetic data
from .synth import GroundTruth, SynthConfig, SynthRecord, generate, generate_dataset

__all__ = [
    "__version__",
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
    # Engine
    "Delineator",
    "delineate",
    "decision_rules",
    "detect_ppg_peaks",
    # Logging
    "PipelineLogger",
    "LogLevel",
    # Events
    "DelineationStage",
    "EventStatus",
    "DelineationEvent",
    "EventEmitter",
    "DelineationEventCollector",
    # Synthetic data
    "GroundTruth",
    "SynthConfig",
    "SynthRecord",
    "generate",
    "generate_dataset",
]
