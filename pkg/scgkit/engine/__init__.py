"""
scgkit Delineation Engine.

This module contains the delineation engine and its pipeline:
PPG apex detection, diastole delineation with the decision rules,
diastole masking, systole delineation and beat assembly.

Components:
    - Delineator: Windowed orchestrator
    - DelineationPipeline: Pluggable per-window stages
    - DelineationContext: State shared by the stages

Example:
    >>> from scgkit.engine import Delineator
    >>> beats = Delineator(config=config).delineate(scg, ppg)
"""

from .assembly import merge_windows, pair_beats, window_bounds
from .context import DelineationContext
from .decision_rules import RulePoints, bin_index, decision_rules
from .delineator import Delineator, delineate
from .diastole import (
    DiastoleTriple,
    check_synchronized,
    delineate_diastole,
    locate_pac,
    mask_diastole,
    mask_intervals,
)
from .pipeline import DelineationPipeline, PipelineStage
from .ppg import detect_ppg_peaks, ppg_ensemble
from .systole import SystoleTriple, detect_ao, instantaneous_energy

__all__ = [
    "Delineator",
    "delineate",
    "DelineationContext",
    "DelineationPipeline",
    "PipelineStage",
    "RulePoints",
    "bin_index",
    "decision_rules",
    "DiastoleTriple",
    "SystoleTriple",
    "check_synchronized",
    "delineate_diastole",
    "detect_ao",
    "detect_ppg_peaks",
    "instantaneous_energy",
    "locate_pac",
    "mask_diastole",
    "mask_intervals",
    "merge_windows",
    "pair_beats",
    "ppg_ensemble",
    "window_bounds",
]
