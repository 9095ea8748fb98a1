"""
Delineator - Main orchestrator for SCG fiducial-point delineation.

This is a slim orchestrator that cuts the record into overlapping
windows, runs the DelineationPipeline on each, and merges the per-window
beats into one deduplicated, time-ordered annotation list.

Example:
    >>> from scgkit.engine import Delineator
    >>> delineator = Delineator(config_path="scgkit.yaml")
    >>> beats = delineator.delineate(scg, ppg)
"""

from typing import Callable, List, Optional

from .assembly import merge_windows, window_bounds
from .context import DelineationContext
from .diastole import check_synchronized
from .pipeline import DelineationPipeline, PipelineStage
from .stages import DiastoleStage, MaskingStage, PpgPeakStage, SystoleStage

from ..core.config import DelineatorConfig
from ..core.events import DelineationEvent, EventEmitter
from ..core.interfaces import LoggerProtocol
from ..core.types import BeatAnnotation, SampledSignal
from ..dsp.filters import lowpass
from ..log import PipelineLogger


class Delineator:
    """
    SCG delineation engine guided by the synchronized PPG.

    Pipeline Stages (per window):
        1. PPG Peaks - systolic PPG apices
        2. Diastole - pAC, AC, MO
        3. Masking - diastoles zeroed in the SCG
        4. Systole - AO, IM, IC and beat pairing

    Windows are processed sequentially in time order, so results never
    depend on scheduling.

    Attributes:
        config: DelineatorConfig instance
        pipeline: DelineationPipeline instance
        event_emitter: Event emitter for progress tracking

    Example:
        >>> delineator = Delineator(config=DelineatorConfig({"window_s": 5.0}))
        >>> beats = delineator.delineate(scg, ppg)
        >>> beats[0].lvet_ms
        300.0
    """

    def __init__(
        self,
        config_path: Optional[str] = None,
        config: Optional[DelineatorConfig] = None,
        event_callback: Optional[Callable[[DelineationEvent], None]] = None,
        logger: Optional[LoggerProtocol] = None,
    ):
        """
        Initialize the delineator.

        Args:
            config_path: Path to a YAML configuration file
            config: DelineatorConfig object (alternative to config_path)
            event_callback: Callback receiving pipeline events
            logger: Custom logger (default: PipelineLogger at the configured level)

        Raises:
            ValueError: If both config_path and config are provided
        """
        if config_path and config:
            raise ValueError("Cannot specify both config_path and config")

        self.config = self._load_config(config_path, config)
        self.logger: LoggerProtocol = logger or PipelineLogger.from_name(self.config.log_level)

        self.event_emitter = EventEmitter(logger=self.logger)
        if event_callback:
            self.event_emitter.add_callback(event_callback)
        self.pipeline = self._build_pipeline()

    def _load_config(
        self,
        config_path: Optional[str],
        config: Optional[DelineatorConfig],
    ) -> DelineatorConfig:
        if config:
            return config
        if config_path:
            return DelineatorConfig.load(config_path)
        return DelineatorConfig()

    def _build_pipeline(self) -> DelineationPipeline:
        stages: List[PipelineStage] = [
            PpgPeakStage(),
            DiastoleStage(),
            MaskingStage(),
            SystoleStage(),
        ]
        return DelineationPipeline(stages, logger=self.logger, event_emitter=self.event_emitter)

    def _preprocess(self, signal: SampledSignal) -> SampledSignal:
        if not self.config.anti_alias:
            return signal
        return lowpass(signal, self.config.anti_alias_hz)

    def delineate(self, scg: SampledSignal, ppg: SampledSignal) -> List[BeatAnnotation]:
        """
        Delineate every beat of a synchronized SCG/PPG record.

        Args:
            scg: SCG channel
            ppg: PPG channel with the same fs and length

        Returns:
            Beats ordered by time with record-level sample indices

        Raises:
            InputError: If the channels are not synchronized or the record
                is shorter than 3 s
        """
        check_synchronized(scg, ppg)
        scg = self._preprocess(scg)
        ppg = self._preprocess(ppg)

        window = scg.ms_to_samples(self.config.window_s * 1000.0)
        overlap = scg.ms_to_samples(self.config.window_overlap_s * 1000.0)
        bounds = window_bounds(len(scg), window, overlap)

        self.logger.section(f"Delineating {scg.duration_s:.1f} s in {len(bounds)} windows")

        per_window: List[List[BeatAnnotation]] = []
        for index, (start, stop) in enumerate(bounds):
            context = DelineationContext(
                scg=scg.segment(start, stop),
                ppg=ppg.segment(start, stop),
                config=self.config,
                offset=start,
                window_index=index,
            )
            self.pipeline.run(context)
            self.logger.debug(
                f"Window {index} [{start}, {stop}): {len(context.beats)} beats ({context.reason})"
            )
            per_window.append(context.record_beats())

        beats = merge_windows(per_window, scg.ms_to_samples(self.config.dedup_ms))
        complete = sum(beat.is_complete for beat in beats)
        self.logger.info(f"Delineated {len(beats)} beats ({complete} complete)")
        return beats


def delineate(
    scg: SampledSignal,
    ppg: SampledSignal,
    window_s: Optional[float] = None,
    config: Optional[DelineatorConfig] = None,
    logger: Optional[LoggerProtocol] = None,
    event_callback: Optional[Callable[[DelineationEvent], None]] = None,
) -> List[BeatAnnotation]:
    """
    Functional entry point: delineate a record with an optional window override.

    Example:
        >>> beats = delineate(scg, ppg, window_s=10)
    """
    config = (config or DelineatorConfig()).with_overrides({"window_s": window_s})
    return Delineator(config=config, event_callback=event_callback, logger=logger).delineate(
        scg, ppg
    )
