"""
Synthetic SCG + PPG records with exact ground truth.

Example:
    >>> from scgkit.synth import SynthConfig, generate
    >>> record = generate(SynthConfig(seed=42))
    >>> len(record.scg)
    60001
"""

from .generator import (
    CLASS_LABELS,
    CLASS_NAMES,
    SCG_WAVES,
    BreathMode,
    GroundTruth,
    SynthConfig,
    SynthRecord,
    Wave,
    derive_seeds,
    generate,
    generate_dataset,
    measured_snr_db,
)

__all__ = [
    "CLASS_LABELS",
    "CLASS_NAMES",
    "SCG_WAVES",
    "BreathMode",
    "GroundTruth",
    "SynthConfig",
    "SynthRecord",
    "Wave",
    "derive_seeds",
    "generate",
    "generate_dataset",
    "measured_snr_db",
]
