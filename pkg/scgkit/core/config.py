"""
Delineation and analysis configuration loading and management.

This module provides the DelineatorConfig class for loading, validating
and managing every tunable of the pipeline from flat YAML files or
dictionaries. Command-line flags are layered on top with
``with_overrides``.

Example:
    >>> from scgkit.core.config import DelineatorConfig
    >>>
    >>> # Load from file
    >>> config = DelineatorConfig.load("scgkit.yaml")
    >>>
    >>> # Override from the command line
    >>> config = config.with_overrides({"window_s": 5.0})
    >>> config.window_s
    5.0
    >>>
    >>> # Provenance hash recorded in every output file
    >>> digest = config.config_hash()
"""
import hashlib
import json
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Union

import yaml

from .errors import ConfigurationError

_Number = (int, float)

# key -> (default, accepted types, predicate, constraint description)
_SCHEMA: Dict[str, Tuple[Any, tuple, Callable[[Any], bool], str]] = {
    # signal core
    "detrend_cutoff_hz": (0.5, _Number, lambda v: v > 0, "> 0"),
    "filter_order": (2, (int,), lambda v: v >= 1, "integer >= 1"),
    "anti_alias": (False, (bool,), lambda v: True, "boolean"),
    "anti_alias_hz": (50.0, _Number, lambda v: v > 0, "> 0"),
    "systole_band_low_hz": (20.0, _Number, lambda v: v > 0, "> 0"),
    "systole_band_high_hz": (30.0, _Number, lambda v: v > 0, "> 0"),
    "systole_band_order": (4, (int,), lambda v: v >= 2, "integer >= 2"),
    # scalogram
    "scale_min": (1, (int,), lambda v: v >= 1, "integer >= 1 (samples)"),
    "scale_max": (150, (int,), lambda v: v >= 1, "integer >= 1 (samples)"),
    "kernel_half_width": (5.0, _Number, lambda v: v > 1, "> 1 (prototype units)"),
    # envelope
    "envelope_p": (39, (int,), lambda v: v >= 1, "natural number"),
    "envelope_q": (16, (int,), lambda v: v >= 1, "natural number"),
    "impulse_threshold_frac": (0.3, _Number, lambda v: 0 < v < 1, "0 < value < 1"),
    "impulse_refractory_ms": (300.0, _Number, lambda v: v > 0, "> 0"),
    "moving_max_window_s": (2.0, _Number, lambda v: v > 0, "> 0"),
    # delineator
    "ppg_relocate_ms": (50.0, _Number, lambda v: v >= 0, ">= 0"),
    "pac_half_window_ms": (100.0, _Number, lambda v: v > 0, "> 0"),
    "block_a_ms": (100.0, _Number, lambda v: v > 0, "> 0"),
    "block_b_ms": (200.0, _Number, lambda v: v > 0, "> 0"),
    "mask_guard_ms": (20.0, _Number, lambda v: v >= 0, ">= 0"),
    "ao_relocate_ms": (30.0, _Number, lambda v: v >= 0, ">= 0"),
    "window_s": (10.0, _Number, lambda v: v >= 3, ">= 3 (PPG peak detection needs 3 s)"),
    "window_overlap_s": (1.0, _Number, lambda v: v >= 0, ">= 0"),
    "dedup_ms": (200.0, _Number, lambda v: v > 0, "> 0"),
    # analysis
    "tol_ms": (50.0, _Number, lambda v: v > 0, "> 0"),
    "svm_c": (1.0, _Number, lambda v: v > 0, "> 0"),
    "svm_gamma": (None, _Number + (type(None),), lambda v: v is None or v > 0,
                  "> 0 or null for 1/feature-count"),
    "knn_k": (5, (int,), lambda v: v >= 1, "integer >= 1"),
    "lda_ridge": (1e-6, _Number, lambda v: v >= 0, ">= 0"),
    "k_folds": (10, (int,), lambda v: v >= 2, "integer >= 2"),
    "cv_unit": ("beat", (str,), lambda v: v in ("beat", "record"), "'beat' or 'record'"),
    "ttest_alpha": (0.05, _Number, lambda v: 0 < v < 1, "0 < value < 1"),
    "feature_segment_s": (40.0, _Number + (type(None),), lambda v: v is None or v > 0,
                          "> 0 or null for the whole record"),
    # run
    "seed": (0, (int,), lambda v: v >= 0, "integer >= 0"),
    "log_level": ("info", (str,), lambda v: v in ("minimal", "info", "debug"),
                  "'minimal', 'info' or 'debug'"),
}

DEFAULTS: Dict[str, Any] = {key: entry[0] for key, entry in _SCHEMA.items()}


class DelineatorConfig:
    """
    Configuration for delineation, envelope construction and analysis.

    Holds one flat mapping of tunables. Every key of the schema is exposed
    as an attribute; missing keys take their defaults.

    Attributes:
        detrend_cutoff_hz: Baseline-drift high-pass cutoff (default 0.5 Hz)
        systole_band_low_hz / systole_band_high_hz: AO detection band (20-30 Hz)
        envelope_p / envelope_q: Transfer characteristic parameters (39, 16)
        window_s: Processing window length in seconds (default 10)
        tol_ms: Detection matching tolerance in milliseconds (default 50)
        ...: see ``DEFAULTS`` for the full list

    Example:
        >>> config = DelineatorConfig({"envelope_p": 39, "envelope_q": 16})
        >>> config.block_b_ms
        200.0
    """

    def __init__(self, config_dict: Optional[Dict[str, Any]] = None):
        """
        Initialize from configuration dictionary.

        Args:
            config_dict: Raw configuration dictionary (flat)

        Raises:
            ConfigurationError: If configuration is invalid
        """
        config_dict = {} if config_dict is None else config_dict
        self._validate_config(config_dict)

        values = dict(DEFAULTS)
        for key, value in config_dict.items():
            if isinstance(DEFAULTS[key], float) and isinstance(value, int) and not isinstance(
                value, bool
            ):
                value = float(value)
            values[key] = value
        self.config: Dict[str, Any] = values

        if self.systole_band_low_hz >= self.systole_band_high_hz:
            raise ConfigurationError(
                message="systole_band_low_hz must be below systole_band_high_hz",
                field="systole_band_low_hz",
                value=self.systole_band_low_hz,
            )
        if self.scale_min > self.scale_max:
            raise ConfigurationError(
                message="scale_min must not exceed scale_max",
                field="scale_min",
                value=self.scale_min,
            )
        if self.window_overlap_s >= self.window_s:
            raise ConfigurationError(
                message="window_overlap_s must be shorter than window_s",
                field="window_overlap_s",
                value=self.window_overlap_s,
            )

    def __getattr__(self, name: str) -> Any:
        config = self.__dict__.get("config")
        if config is not None and name in config:
            return config[name]
        raise AttributeError(name)

    def _validate_config(self, config_dict: Dict[str, Any]) -> None:
        """
        Validate configuration structure and values.

        Raises:
            ConfigurationError: If configuration is invalid
        """
        if not isinstance(config_dict, dict):
            raise ConfigurationError(
                message="Config must be a mapping",
                value=type(config_dict).__name__,
            )

        for key, value in config_dict.items():
            if key not in _SCHEMA:
                raise ConfigurationError(message="Unknown configuration key", field=str(key))

            _, types, predicate, constraint = _SCHEMA[key]
            # bool is an int subclass; only accept it where a bool is expected
            if isinstance(value, bool) and bool not in types:
                raise ConfigurationError(
                    message=f"must be {constraint}", field=key, value=value
                )
            if not isinstance(value, types):
                raise ConfigurationError(
                    message=f"must be {constraint}", field=key, value=value
                )
            if not predicate(value):
                raise ConfigurationError(
                    message=f"must be {constraint}", field=key, value=value
                )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "DelineatorConfig":
        """
        Load configuration from a flat YAML file.

        Args:
            path: Path to the configuration file

        Returns:
            DelineatorConfig instance

        Raises:
            FileNotFoundError: If config file doesn't exist
            ConfigurationError: If config is invalid or cannot be parsed
        """
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(path) as f:
            try:
                data = yaml.safe_load(f)
            except yaml.YAMLError as e:
                raise ConfigurationError(
                    message=f"Failed to parse YAML: {e}",
                    field="file",
                    value=str(path),
                )

        if data is None:
            data = {}

        return cls(data)

    @classmethod
    def create_default(cls, output_path: Union[str, Path]) -> None:
        """
        Write a configuration file holding every key at its default value.

        Example:
            >>> DelineatorConfig.create_default("scgkit.yaml")
            >>> config = DelineatorConfig.load("scgkit.yaml")
        """
        with open(output_path, "w") as f:
            yaml.safe_dump(DEFAULTS, f, default_flow_style=False, sort_keys=False)

    def with_overrides(self, overrides: Dict[str, Any]) -> "DelineatorConfig":
        """
        Return a new configuration with the given keys replaced.

        Keys whose value is None are ignored, so unset CLI flags can be
        passed through unchanged.
        """
        merged = dict(self.config)
        for key, value in overrides.items():
            if value is not None:
                merged[key] = value
        return DelineatorConfig(merged)

    def get(self, key: str, default: Any = None) -> Any:
        return self.config.get(key, default)

    def to_dict(self) -> Dict[str, Any]:
        """Return the effective configuration as a dictionary."""
        return self.config.copy()

    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON of the effective configuration."""
        canonical = json.dumps(self.config, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DelineatorConfig) and self.config == other.config

    def __repr__(self) -> str:
        return (
            f"DelineatorConfig(window_s={self.window_s}, "
            f"p={self.envelope_p}, q={self.envelope_q}, "
            f"hash={self.config_hash()[:12]})"
        )
