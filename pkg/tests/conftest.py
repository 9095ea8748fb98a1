"""
Shared test fixtures for scgkit.

Provides mock objects, synthetic records and factory functions to reduce
test boilerplate. Expensive artefacts (generated and delineated records)
are session-scoped.

Usage:
    pytest tests/ -v

Example:
    def test_delineation(clean_record, clean_beats):
        assert len(clean_beats) > 0
"""
import math
from typing import Any, Dict, List
from unittest.mock import Mock

import numpy as np
import pytest


# ============================================================
# Mock Factories
# ============================================================

@pytest.fixture
def mock_logger():
    """
    Create a mock logger that implements LoggerProtocol.

    Returns:
        Mock object with all logger methods
    """
    logger = Mock()
    logger.debug = Mock()
    logger.info = Mock()
    logger.warning = Mock()
    logger.error = Mock()
    logger.success = Mock()
    logger.minimal = Mock()
    logger.section = Mock()
    logger.subsection = Mock()
    return logger


@pytest.fixture
def event_collector():
    from scgkit.events import DelineationEventCollector

    return DelineationEventCollector()


# ============================================================
# Signal Fixtures
# ============================================================

@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def sine_signal():
    """Five seconds of a 5 Hz sine at 1 kHz."""
    from scgkit.core.types import SampledSignal

    t = np.arange(5000) / 1000.0
    return SampledSignal(np.sin(2 * np.pi * 5 * t), 1000.0, "scg")


# ============================================================
# Synthetic Records
# ============================================================

@pytest.fixture(scope="session")
def clean_config():
    """Noise-free, drift-free 20 s record settings."""
    from scgkit.synth import SynthConfig

    return SynthConfig(
        duration_s=20.0,
        snr_db=math.inf,
        ppg_snr_db=math.inf,
        drift_amp=0.0,
        seed=1,
    )


@pytest.fixture(scope="session")
def clean_record(clean_config):
    from scgkit.synth import generate

    return generate(clean_config, name="clean")


@pytest.fixture(scope="session")
def noisy_record():
    """20 s record with the default noise, drift and respiration."""
    from scgkit.synth import SynthConfig, generate

    return generate(SynthConfig(duration_s=20.0, seed=7), name="noisy")


@pytest.fixture(scope="session")
def quiet_logger():
    from scgkit.log import PipelineLogger

    return PipelineLogger.from_name("minimal")


@pytest.fixture(scope="session")
def clean_beats(clean_record, quiet_logger):
    from scgkit.engine import Delineator

    return Delineator(logger=quiet_logger).delineate(clean_record.scg, clean_record.ppg)


@pytest.fixture(scope="session")
def noisy_beats(noisy_record, quiet_logger):
    from scgkit.engine import Delineator

    return Delineator(logger=quiet_logger).delineate(noisy_record.scg, noisy_record.ppg)


# ============================================================
# Configuration Fixtures
# ============================================================

@pytest.fixture
def sample_config_dict() -> Dict[str, Any]:
    """
    Sample delineator configuration dictionary.

    Returns:
        Flat configuration dict with a few overridden keys
    """
    return {
        "window_s": 5.0,
        "window_overlap_s": 1.0,
        "envelope_p": 39,
        "envelope_q": 16,
        "tol_ms": 40,
        "log_level": "debug",
    }


# ============================================================
# Feature Fixtures
# ============================================================

@pytest.fixture
def separable_features():
    """
    Two well separated Gaussian classes with 30 rows each.

    Column 0 carries the class difference; column 1 is shared noise.
    """
    from scgkit.analysis import FeatureMatrix

    generator = np.random.default_rng(5)
    n = 30
    normal = np.column_stack([generator.normal(0.0, 0.3, n), generator.normal(0.0, 1.0, n)])
    held = np.column_stack([generator.normal(3.0, 0.3, n), generator.normal(0.0, 1.0, n)])
    values = np.vstack([normal, held])
    labels = np.array([0] * n + [1] * n)
    groups = np.array([f"r{i % 6}" for i in range(n)] + [f"h{i % 6}" for i in range(n)], dtype=object)
    return FeatureMatrix(values, labels, groups, numbers=(1, 2))


def beat(fs: float = 1000.0, offset: int = 0) -> "Any":
    """Complete beat with the default synthetic offsets, shifted by ``offset`` samples."""
    from scgkit.core.types import BeatAnnotation

    return BeatAnnotation.build(
        fs,
        im=30 + offset,
        ao=60 + offset,
        ic=90 + offset,
        ac=360 + offset,
        pac=400 + offset,
        mo=460 + offset,
    )


@pytest.fixture
def beat_factory():
    return beat


@pytest.fixture
def regular_beats() -> List[Any]:
    """Ten complete beats, one per second."""
    return [beat(offset=1000 * i) for i in range(10)]
