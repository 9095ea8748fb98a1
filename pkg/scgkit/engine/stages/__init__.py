"""
Pipeline stages for SCG delineation.

Each stage implements PipelineStage and handles one step of the
per-window delineation.

Stages:
    - PpgPeakStage: Detrend the channels and find PPG apices
    - DiastoleStage: Locate pAC, AC and MO
    - MaskingStage: Zero the diastoles in the SCG
    - SystoleStage: Locate AO, IM and IC and assemble beats
"""

from .ppg_peaks import PpgPeakStage
from .diastole import DiastoleStage
from .masking import MaskingStage
from .systole import SystoleStage

__all__ = [
    "PpgPeakStage",
    "DiastoleStage",
    "MaskingStage",
    "SystoleStage",
]
