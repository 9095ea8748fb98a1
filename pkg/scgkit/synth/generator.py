"""
Synthetic SCG + PPG records with exact fiducial ground truth.

Every beat of the SCG is a sum of Gaussian-windowed cosine wavelets. The
six delineated fiducials (IM, AO, IC, AC, pAC, MO) each get one wavelet
centred on an integer sample; four companion waves (MC before IM, RE
after IC, a late-systolic wave before AC and RF after MO) give the
profiles their surrounding peaks. Systolic wavelets around AO carry
20-30 Hz content, diastolic ones 10-20 Hz.

The PPG is a train of asymmetric pulses ``(t/T)^a exp(a (1 - t/T))``
whose apex follows AC by the pulse transit time.

Noise is drawn from ``numpy.random.default_rng(seed)``, band-limited by
a zero-phase Butterworth low-pass (the acquisition chain) and scaled so
that the record reaches ``snr_db`` exactly.
"""

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import ConfigurationError
from ..core.types import FIDUCIALS, BeatAnnotation, SampledSignal, TruthFileDict
from ..dsp.filters import lowpass


class BreathMode(str, Enum):
    """Breathing condition of a synthetic record."""
    NORMAL = "normal"
    HELD = "held"


CLASS_LABELS: Dict[BreathMode, int] = {BreathMode.NORMAL: 0, BreathMode.HELD: 1}
CLASS_NAMES: Dict[int, str] = {0: "normal", 1: "breathless"}


class Wave(NamedTuple):
    """One SCG wavelet, placed relative to a fiducial of its beat."""
    anchor: str
    delta_ms: float
    sign: float
    freq_hz: float
    sigma_ms: float
    amplitude: float
    diastolic: bool


SCG_WAVES: Dict[str, Wave] = {
    "mc": Wave("im", -20.0, +1.0, 10.0, 12.0, 0.6, False),
    "im": Wave("im", 0.0, -1.0, 25.0, 6.0, 0.5, False),
    "ao": Wave("ao", 0.0, +1.0, 25.0, 10.0, 1.0, False),
    "ic": Wave("ic", 0.0, -1.0, 25.0, 6.0, 0.6, False),
    "re": Wave("ic", 40.0, +1.0, 12.0, 12.0, 0.5, False),
    "ls": Wave("ac", -30.0, +1.0, 12.0, 12.0, 0.4, True),
    "ac": Wave("ac", 0.0, -1.0, 15.0, 10.0, 0.6, True),
    "pac": Wave("pac", 0.0, +1.0, 15.0, 10.0, 0.8, True),
    "mo": Wave("mo", 0.0, -1.0, 15.0, 10.0, 0.5, True),
    "rf": Wave("mo", 50.0, +1.0, 10.0, 15.0, 0.5, True),
}
"""Default morphology; amplitudes are relative to AO."""


@dataclass(frozen=True)
class SynthConfig:
    """
    Generator settings.

    Attributes:
        fs: Sampling rate in Hz (>= 200)
        duration_s: Record length; the record holds duration_s * fs + 1 samples
        hr_bpm / hr_sd_bpm: Mean heart rate and beat-to-beat spread
        snr_db: SCG signal-to-noise ratio (inf disables noise)
        noise_lowpass_hz: Acquisition band-limit of the noise (None: white)
        ppg_snr_db / ppg_noise_lowpass_hz: Same for the PPG channel
        drift_amp / drift_hz: Sinusoidal baseline drift added to both channels
        fiducial_offsets_ms: Offsets of IM, AO, IC, AC, pAC, MO from beat onset
        offset_jitter_ms: Standard deviation of the per-beat offset jitter
        ppg_transit_ms / ppg_transit_jitter_ms: Delay of the PPG apex after AC
        ppg_rise_ms / ppg_shape: Pulse rise time T and exponent a
        breath_mode: "normal" (respiratory modulation) or "held"
        resp_rate_hz / resp_amp_mod / rsa_bpm: Respiratory amplitude and
            heart-rate modulation in normal mode
        held_hr_delta_bpm: Heart-rate drop in held mode
        held_hrv_scale: Factor applied to hr_sd_bpm in held mode
        held_offset_shift_ms: Shift of the diastolic offsets in held mode
        held_amp_scale: Factor on the diastolic wave amplitudes in held mode
        held_direction: +1 delays the diastolic offsets and applies
            held_amp_scale; -1 advances them and applies 2 - held_amp_scale
        dropout_prob: Probability of losing a beat's PPG pulse
        dropout_beats: Beat numbers whose PPG pulse is always dropped
        seed: Seed of numpy.random.default_rng

    Example:
        >>> cfg = SynthConfig(duration_s=60, hr_bpm=60, hr_sd_bpm=0, rsa_bpm=0)
        >>> record = generate(cfg)
        >>> len(record.truth.beats)
        60
    """

    fs: float = 1000.0
    duration_s: float = 60.0
    hr_bpm: float = 72.0
    hr_sd_bpm: float = 2.0
    snr_db: float = 20.0
    noise_lowpass_hz: Optional[float] = 50.0
    ppg_snr_db: float = 30.0
    ppg_noise_lowpass_hz: Optional[float] = 10.0
    drift_amp: float = 0.1
    drift_hz: float = 0.15
    fiducial_offsets_ms: Tuple[float, ...] = (30.0, 60.0, 90.0, 360.0, 400.0, 460.0)
    offset_jitter_ms: float = 2.0
    ppg_transit_ms: float = 40.0
    ppg_transit_jitter_ms: float = 2.0
    ppg_rise_ms: float = 150.0
    ppg_shape: float = 4.0
    breath_mode: BreathMode = BreathMode.NORMAL
    resp_rate_hz: float = 0.25
    resp_amp_mod: float = 0.15
    rsa_bpm: float = 3.0
    held_hr_delta_bpm: float = 8.0
    held_hrv_scale: float = 0.3
    held_offset_shift_ms: float = 25.0
    held_amp_scale: float = 0.7
    held_direction: int = 1
    dropout_prob: float = 0.0
    dropout_beats: Tuple[int, ...] = ()
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "breath_mode", BreathMode(self.breath_mode))
        object.__setattr__(
            self, "fiducial_offsets_ms", tuple(float(v) for v in self.fiducial_offsets_ms)
        )
        object.__setattr__(self, "dropout_beats", tuple(int(v) for v in self.dropout_beats))

        if self.fs < 200:
            raise ConfigurationError("fs must be at least 200 Hz", field="fs", value=self.fs)
        if self.duration_s <= 0:
            raise ConfigurationError("must be positive", field="duration_s", value=self.duration_s)
        if self.hr_bpm <= 0 or self.hr_sd_bpm < 0:
            raise ConfigurationError("invalid heart rate", field="hr_bpm", value=self.hr_bpm)
        if math.isnan(self.snr_db) or math.isnan(self.ppg_snr_db):
            raise ConfigurationError("SNR must be a number", field="snr_db", value=self.snr_db)
        offsets = self.fiducial_offsets_ms
        if len(offsets) != len(FIDUCIALS):
            raise ConfigurationError(
                f"expected {len(FIDUCIALS)} offsets", field="fiducial_offsets_ms", value=offsets
            )
        if any(b <= a for a, b in zip(offsets, offsets[1:])) or offsets[0] < 0:
            raise ConfigurationError(
                "offsets must satisfy 0 <= IM < AO < IC < AC < pAC < MO",
                field="fiducial_offsets_ms",
                value=offsets,
            )
        if not offsets[3] < offsets[3] + self.ppg_transit_ms < offsets[5]:
            raise ConfigurationError(
                "PPG apex must fall between AC and MO",
                field="ppg_transit_ms",
                value=self.ppg_transit_ms,
            )
        if self.held_direction not in (-1, 1):
            raise ConfigurationError(
                "must be 1 or -1", field="held_direction", value=self.held_direction
            )
        if not 0.0 <= self.dropout_prob <= 1.0:
            raise ConfigurationError(
                "must lie in [0, 1]", field="dropout_prob", value=self.dropout_prob
            )

    @property
    def n_samples(self) -> int:
        return int(round(self.duration_s * self.fs)) + 1

    @property
    def label(self) -> int:
        return CLASS_LABELS[self.breath_mode]

    def held(self) -> "SynthConfig":
        """Same settings in breath-held mode."""
        return replace(self, breath_mode=BreathMode.HELD)

    def to_dict(self) -> Dict[str, Any]:
        data = {name: getattr(self, name) for name in self.__dataclass_fields__}
        data["breath_mode"] = self.breath_mode.value
        data["fiducial_offsets_ms"] = list(self.fiducial_offsets_ms)
        data["dropout_beats"] = list(self.dropout_beats)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SynthConfig":
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ConfigurationError("Unknown synth key", field=sorted(unknown)[0])
        return cls(**data)


@dataclass
class GroundTruth:
    """
    Exact annotations of a synthetic record.

    Attributes:
        fs: Sampling rate
        beats: All six fiducials of every beat
        ppg_peaks: PPG apex indices (beats with a dropped pulse excluded)
        label: 0 normal breathing, 1 breathlessness
        seed: Generator seed
        dropped: Beat numbers whose PPG pulse was dropped
    """

    fs: float
    beats: List[BeatAnnotation] = field(default_factory=list)
    ppg_peaks: List[int] = field(default_factory=list)
    label: int = 0
    seed: int = 0
    dropped: List[int] = field(default_factory=list)

    def fiducial(self, name: str) -> List[int]:
        return [getattr(beat, name) for beat in self.beats]

    def to_dict(self) -> TruthFileDict:
        return {
            "fs": self.fs,
            "label": CLASS_NAMES[self.label],
            "seed": self.seed,
            "beats": [{name: getattr(b, name) for name in FIDUCIALS} for b in self.beats],
            "ppg_peaks": list(self.ppg_peaks),
            "meta": {"dropped": list(self.dropped)},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "GroundTruth":
        fs = float(data["fs"])
        names = {v: k for k, v in CLASS_NAMES.items()}
        return cls(
            fs=fs,
            beats=[BeatAnnotation.build(fs, **beat) for beat in data.get("beats", [])],
            ppg_peaks=[int(i) for i in data.get("ppg_peaks", [])],
            label=names.get(data.get("label", "normal"), 0),
            seed=int(data.get("seed", 0)),
            dropped=[int(i) for i in data.get("meta", {}).get("dropped", [])],
        )


@dataclass
class SynthRecord:
    """A generated record: noisy channels, their clean parts and the truth."""

    name: str
    scg: SampledSignal
    ppg: SampledSignal
    truth: GroundTruth
    scg_clean: SampledSignal
    ppg_clean: SampledSignal

    @property
    def label(self) -> int:
        return self.truth.label


def _wavelet(t: np.ndarray, center: float, wave: Wave, amplitude: float) -> np.ndarray:
    tau = t - center
    sigma = wave.sigma_ms / 1000.0
    return (
        wave.sign
        * amplitude
        * np.exp(-0.5 * (tau / sigma) ** 2)
        * np.cos(2.0 * np.pi * wave.freq_hz * tau)
    )


def _ppg_pulse(t: np.ndarray, apex: float, rise_s: float, shape: float) -> np.ndarray:
    u = np.clip((t - (apex - rise_s)) / rise_s, 0.0, None)
    return np.power(u, shape) * np.exp(shape * (1.0 - u))


def _band_limited_noise(
    rng: np.random.Generator, n: int, fs: float, cutoff_hz: Optional[float]
) -> np.ndarray:
    noise = rng.standard_normal(n)
    if cutoff_hz is not None and cutoff_hz < fs / 2.0:
        noise = lowpass(SampledSignal(noise, fs, "noise"), cutoff_hz).samples
    return noise


def _add_noise(
    clean: np.ndarray, noise: np.ndarray, snr_db: float
) -> np.ndarray:
    if math.isinf(snr_db) and snr_db > 0:
        return clean.copy()
    power_signal = float(np.mean(clean**2))
    power_noise = float(np.mean(noise**2))
    if power_noise == 0.0:
        return clean.copy()
    scale = math.sqrt(power_signal / (power_noise * 10.0 ** (snr_db / 10.0)))
    return clean + scale * noise


def _beat_schedule(
    cfg: SynthConfig, rng: np.random.Generator
) -> List[Tuple[Dict[str, int], float, bool]]:
    """Per beat: fiducial sample indices, amplitude factor and PPG dropout flag."""
    held = cfg.breath_mode is BreathMode.HELD
    hr_mean = cfg.hr_bpm - (cfg.held_hr_delta_bpm if held else 0.0)
    hr_sd = cfg.hr_sd_bpm * (cfg.held_hrv_scale if held else 1.0)
    offsets = np.asarray(cfg.fiducial_offsets_ms)
    if held:
        shift = cfg.held_direction * cfg.held_offset_shift_ms
        offsets = offsets + np.array([0, 0, 0, 1, 1, 1]) * shift
    gaps = np.diff(offsets)
    jitter_limit = min(3.0 * cfg.offset_jitter_ms, 0.25 * float(gaps.min()))
    n = cfg.n_samples
    fs = cfg.fs

    schedule = []
    onset = 0.0
    beat_no = 0
    while True:
        phase = 2.0 * np.pi * cfg.resp_rate_hz * onset
        rsa = 0.0 if held else cfg.rsa_bpm * math.sin(phase)
        hr = max(20.0, hr_mean + rsa + hr_sd * rng.standard_normal())
        jitter = np.clip(
            cfg.offset_jitter_ms * rng.standard_normal(len(FIDUCIALS)),
            -jitter_limit,
            jitter_limit,
        )
        transit = cfg.ppg_transit_ms + cfg.ppg_transit_jitter_ms * rng.standard_normal()
        dropout = rng.random() < cfg.dropout_prob or beat_no in cfg.dropout_beats

        times_ms = onset * 1000.0 + offsets + jitter
        points = {name: int(round(ms * fs / 1000.0)) for name, ms in zip(FIDUCIALS, times_ms)}
        ac, mo = points["ac"], points["mo"]
        apex = int(round((times_ms[3] + transit) * fs / 1000.0))
        apex = min(max(apex, ac + 1), mo - 1)
        points["apex"] = apex

        if max(points.values()) >= n:
            break
        amp = 1.0 if held else 1.0 + cfg.resp_amp_mod * math.sin(phase)
        schedule.append((points, amp, dropout))
        onset += 60.0 / hr
        beat_no += 1
    return schedule


def generate(cfg: SynthConfig, name: str = "synth") -> SynthRecord:
    """
    Generate one record.

    Args:
        cfg: Generator settings
        name: Record name carried by the result

    Returns:
        SynthRecord with noisy and clean channels and exact ground truth.
        Identical configurations (seed included) give bit-identical output.
    """
    rng = np.random.default_rng(cfg.seed)
    n = cfg.n_samples
    fs = cfg.fs
    t = np.arange(n) / fs
    held = cfg.breath_mode is BreathMode.HELD
    held_amp = 1.0 - cfg.held_direction * (1.0 - cfg.held_amp_scale)
    schedule = _beat_schedule(cfg, rng)

    scg = np.zeros(n)
    ppg = np.zeros(n)
    truth = GroundTruth(fs=fs, label=cfg.label, seed=cfg.seed)

    for beat_no, (points, amp, dropout) in enumerate(schedule):
        for wave in SCG_WAVES.values():
            center = points[wave.anchor] / fs + wave.delta_ms / 1000.0
            support = 6.0 * wave.sigma_ms / 1000.0
            lo = max(0, int(math.floor((center - support) * fs)))
            hi = min(n, int(math.ceil((center + support) * fs)) + 1)
            if lo >= hi:
                continue
            scale = amp * wave.amplitude
            if held and wave.diastolic:
                scale *= held_amp
            scg[lo:hi] += _wavelet(t[lo:hi], center, wave, scale)

        truth.beats.append(BeatAnnotation.build(fs, **{k: points[k] for k in FIDUCIALS}))
        if dropout:
            truth.dropped.append(beat_no)
        else:
            ppg += amp * _ppg_pulse(t, points["apex"] / fs, cfg.ppg_rise_ms / 1000.0, cfg.ppg_shape)
            truth.ppg_peaks.append(points["apex"])

    scg_noise = _band_limited_noise(rng, n, fs, cfg.noise_lowpass_hz)
    ppg_noise = _band_limited_noise(rng, n, fs, cfg.ppg_noise_lowpass_hz)
    drift = cfg.drift_amp * np.sin(2.0 * np.pi * cfg.drift_hz * t)
    if not held:
        ppg_baseline = 0.1 * np.sin(2.0 * np.pi * cfg.resp_rate_hz * t)
    else:
        ppg_baseline = np.zeros(n)

    scg_noisy = _add_noise(scg, scg_noise, cfg.snr_db) + drift
    ppg_noisy = _add_noise(ppg, ppg_noise, cfg.ppg_snr_db) + drift + ppg_baseline

    return SynthRecord(
        name=name,
        scg=SampledSignal(scg_noisy, fs, "scg"),
        ppg=SampledSignal(ppg_noisy, fs, "ppg"),
        truth=truth,
        scg_clean=SampledSignal(scg, fs, "scg"),
        ppg_clean=SampledSignal(ppg, fs, "ppg"),
    )


def derive_seeds(base_seed: int, count: int) -> List[int]:
    """Distinct per-record seeds derived from one base seed."""
    state = np.random.SeedSequence(base_seed).generate_state(count, dtype=np.uint32)
    return [int(s) for s in state]


def generate_dataset(
    cfg_normal: SynthConfig,
    cfg_held: Optional[SynthConfig] = None,
    n_records: int = 8,
    hr_spread_bpm: float = 10.0,
) -> List[SynthRecord]:
    """
    ``n_records`` records per breathing class.

    Seeds are derived from ``cfg_normal.seed``. Records are named
    ``normal_01``..., ``held_01``... and ordered normal first.

    Record i of each class gets the base heart rate ``hr_bpm`` plus the
    i-th of ``n_records`` evenly spaced offsets in
    [-hr_spread_bpm, hr_spread_bpm], so both classes share the same
    rates before the held-mode drop. Held records alternate their
    ``held_direction``, starting with the one of ``cfg_held``.

    Raises:
        ConfigurationError: If n_records < 1 or the class modes are wrong

    Example:
        >>> records = generate_dataset(SynthConfig(duration_s=60), n_records=8)
        >>> len(records)
        16
    """
    if n_records < 1:
        raise ConfigurationError("must be at least 1", field="n_records", value=n_records)
    cfg_held = cfg_held or cfg_normal.held()
    if cfg_normal.breath_mode is not BreathMode.NORMAL or cfg_held.breath_mode is not BreathMode.HELD:
        raise ConfigurationError("expected one normal and one held configuration", field="breath_mode")

    if hr_spread_bpm < 0:
        raise ConfigurationError("must not be negative", field="hr_spread_bpm", value=hr_spread_bpm)

    seeds = derive_seeds(cfg_normal.seed, 2 * n_records)
    offsets = np.linspace(-hr_spread_bpm, hr_spread_bpm, n_records) if n_records > 1 else [0.0]
    records = []
    for i in range(n_records):
        cfg = replace(cfg_normal, seed=seeds[i], hr_bpm=cfg_normal.hr_bpm + float(offsets[i]))
        records.append(generate(cfg, name=f"normal_{i + 1:02d}"))
    for i in range(n_records):
        cfg = replace(
            cfg_held,
            seed=seeds[n_records + i],
            hr_bpm=cfg_held.hr_bpm + float(offsets[i]),
            held_direction=cfg_held.held_direction * (1 if i % 2 == 0 else -1),
        )
        records.append(generate(cfg, name=f"held_{i + 1:02d}"))
    return records


def measured_snr_db(noisy: Sequence[float], clean: Sequence[float]) -> float:
    """SNR of a record from its clean part (drift must be zero)."""
    clean = np.asarray(clean)
    noise = np.asarray(noisy) - clean
    return 10.0 * math.log10(float(np.mean(clean**2)) / float(np.mean(noise**2)))
