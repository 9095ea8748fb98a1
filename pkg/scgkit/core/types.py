"""
Type definitions for scgkit.

Provides the dataclasses shared by every processing layer (sampled
signals, extrema lists, beat annotations, decision-rule settings) and
TypedDict definitions for the JSON documents written by the CLI.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from .errors import InputError, ParameterError

# Use typing_extensions for Python 3.10 compatibility
try:
    from typing import NotRequired, TypedDict
except ImportError:
    from typing_extensions import NotRequired, TypedDict


FIDUCIALS: Tuple[str, ...] = ("im", "ao", "ic", "ac", "pac", "mo")
"""Fiducial point names in their physiological order within a beat."""

FIDUCIAL_LABELS: Dict[str, str] = {
    "im": "IM",
    "ao": "AO",
    "ic": "IC",
    "ac": "AC",
    "pac": "pAC",
    "mo": "MO",
}


# ============================================================
# Signals
# ============================================================

@dataclass(frozen=True)
class SampledSignal:
    """
    Uniformly sampled real-valued series.

    Attributes:
        samples: 1-D float array (arbitrary physical units)
        fs: Sampling rate in Hz, strictly positive
        label: Channel name such as "scg", "ppg" or "ecg"

    Example:
        >>> sig = SampledSignal(np.zeros(1000), fs=1000.0, label="scg")
        >>> sig.ms_to_samples(100)
        100
    """

    samples: np.ndarray
    fs: float
    label: str = "signal"

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise InputError(f"samples must be 1-D, got shape {samples.shape}", self.label)
        if not np.isfinite(self.fs) or self.fs <= 0:
            raise ParameterError("fs", self.fs, "fs > 0")
        if not np.all(np.isfinite(samples)):
            raise InputError("samples contain NaN or Inf", self.label)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return int(self.samples.shape[0])

    @property
    def duration_s(self) -> float:
        return len(self) / self.fs

    def ms_to_samples(self, ms: float) -> int:
        """Convert a duration in milliseconds to a whole number of samples."""
        return int(round(ms * self.fs / 1000.0))

    def samples_to_ms(self, n: float) -> float:
        return float(n) * 1000.0 / self.fs

    def with_samples(self, samples: np.ndarray) -> "SampledSignal":
        """Return a signal with the same fs and label but new samples."""
        return SampledSignal(samples, self.fs, self.label)

    def segment(self, start: int, stop: int) -> "SampledSignal":
        """Return samples[start:stop] as a new signal."""
        return SampledSignal(self.samples[start:stop], self.fs, self.label)

    def scaled(self, factor: float) -> "SampledSignal":
        return SampledSignal(self.samples * factor, self.fs, self.label)

    def require_nonempty(self) -> None:
        if len(self) == 0:
            raise InputError("signal is empty", self.label)


class ExtremaKind(str, Enum):
    """Kind of extremum collected in an ExtremaList."""
    MAXIMA = "maxima"
    MINIMA = "minima"


@dataclass(frozen=True)
class ExtremaList:
    """
    Sorted sample indices of strict local extrema.

    Attributes:
        indices: Strictly increasing int64 indices
        kind: ExtremaKind.MAXIMA or ExtremaKind.MINIMA
    """

    indices: np.ndarray
    kind: ExtremaKind = ExtremaKind.MAXIMA

    def __post_init__(self):
        indices = np.asarray(self.indices, dtype=np.int64).reshape(-1)
        if indices.size > 1 and np.any(np.diff(indices) <= 0):
            raise InputError("extrema indices must be strictly increasing")
        object.__setattr__(self, "indices", indices)
        object.__setattr__(self, "kind", ExtremaKind(self.kind))

    def __len__(self) -> int:
        return int(self.indices.size)

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in self.indices)

    def tolist(self) -> List[int]:
        return [int(i) for i in self.indices]

    def shifted(self, offset: int) -> "ExtremaList":
        return ExtremaList(self.indices + offset, self.kind)

    @classmethod
    def from_unsorted(cls, indices, kind: ExtremaKind = ExtremaKind.MAXIMA) -> "ExtremaList":
        """Build from arbitrary indices, sorting and collapsing duplicates."""
        return cls(np.unique(np.asarray(indices, dtype=np.int64)), kind)


# ============================================================
# Beat annotations
# ============================================================

@dataclass
class BeatAnnotation:
    """
    Fiducial sample indices of one heartbeat and its cardiac intervals.

    Any fiducial may be absent (None) when the beat is only partially
    delineated at a record edge. When every point is present the order
    im < ao < ic < ac < pac < mo holds.

    Attributes:
        im, ao, ic, ac, pac, mo: Sample indices or None
        lvet_ms: AO-to-AC duration in milliseconds (None if AO or AC absent)
        ivrt_ms: AC-to-MO duration in milliseconds (None if AC or MO absent)

    Example:
        >>> beat = BeatAnnotation.build(1000.0, im=30, ao=60, ic=90, ac=360, pac=400, mo=460)
        >>> beat.lvet_ms, beat.ivrt_ms
        (300.0, 100.0)
    """

    im: Optional[int] = None
    ao: Optional[int] = None
    ic: Optional[int] = None
    ac: Optional[int] = None
    pac: Optional[int] = None
    mo: Optional[int] = None
    lvet_ms: Optional[float] = None
    ivrt_ms: Optional[float] = None

    @classmethod
    def build(cls, fs: float, **points: Optional[int]) -> "BeatAnnotation":
        """Create an annotation and derive LVET/IVRT from the given points."""
        unknown = set(points) - set(FIDUCIALS)
        if unknown:
            raise InputError(f"unknown fiducial names: {sorted(unknown)}")
        values = {k: (None if v is None else int(v)) for k, v in points.items()}
        beat = cls(**values)
        if beat.ao is not None and beat.ac is not None:
            beat.lvet_ms = (beat.ac - beat.ao) / fs * 1000.0
        if beat.ac is not None and beat.mo is not None:
            beat.ivrt_ms = (beat.mo - beat.ac) / fs * 1000.0
        return beat

    def points(self) -> Dict[str, Optional[int]]:
        return {name: getattr(self, name) for name in FIDUCIALS}

    @property
    def is_complete(self) -> bool:
        return all(getattr(self, name) is not None for name in FIDUCIALS)

    @property
    def anchor(self) -> Optional[int]:
        """Index used to order and deduplicate beats (AO, else pAC)."""
        return self.ao if self.ao is not None else self.pac

    def is_ordered(self) -> bool:
        """Check im < ao < ic < ac < pac < mo over the points present."""
        present = [getattr(self, n) for n in FIDUCIALS if getattr(self, n) is not None]
        return all(a < b for a, b in zip(present, present[1:]))

    def shifted(self, offset: int) -> "BeatAnnotation":
        moved = {
            name: (None if getattr(self, name) is None else getattr(self, name) + offset)
            for name in FIDUCIALS
        }
        return BeatAnnotation(**moved, lvet_ms=self.lvet_ms, ivrt_ms=self.ivrt_ms)

    def to_dict(self) -> "AnnotationBeatDict":
        return {
            "im": self.im,
            "ao": self.ao,
            "ic": self.ic,
            "ac": self.ac,
            "pac": self.pac,
            "mo": self.mo,
            "lvet_ms": self.lvet_ms,
            "ivrt_ms": self.ivrt_ms,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BeatAnnotation":
        return cls(
            **{name: data.get(name) for name in FIDUCIALS},
            lvet_ms=data.get("lvet_ms"),
            ivrt_ms=data.get("ivrt_ms"),
        )


@dataclass(frozen=True)
class DecisionRuleConfig:
    """
    Settings of the amplitude-histogram decision rules.

    Attributes:
        block_a_ms: Length of the block before each reference peak
        block_b_ms: Length of the block after each reference peak
        bin_edges: Amplitude bins as (low, high] percentages of the reference
            peak amplitude, scanned in the given order
    """

    block_a_ms: float = 100.0
    block_b_ms: float = 200.0
    bin_edges: Tuple[Tuple[float, float], ...] = field(
        default=((80.0, 100.0), (60.0, 80.0), (40.0, 60.0), (20.0, 40.0), (0.0, 20.0))
    )

    def __post_init__(self):
        if self.block_a_ms <= 0:
            raise ParameterError("block_a_ms", self.block_a_ms, "> 0")
        if self.block_b_ms <= 0:
            raise ParameterError("block_b_ms", self.block_b_ms, "> 0")
        edges = sorted(self.bin_edges)
        if not edges or edges[0][0] != 0.0 or edges[-1][1] != 100.0:
            raise ParameterError("bin_edges", self.bin_edges, "bins covering (0, 100]")
        for (lo_a, hi_a), (lo_b, hi_b) in zip(edges, edges[1:]):
            if hi_a != lo_b or lo_a >= hi_a:
                raise ParameterError("bin_edges", self.bin_edges, "contiguous (low, high] bins")

    @property
    def n_bins(self) -> int:
        return len(self.bin_edges)


# ============================================================
# JSON document types
# ============================================================

class AnnotationBeatDict(TypedDict):
    """One beat of an annotation file; absent fiducials are null."""
    im: Optional[int]
    ao: Optional[int]
    ic: Optional[int]
    ac: Optional[int]
    pac: Optional[int]
    mo: Optional[int]
    lvet_ms: Optional[float]
    ivrt_ms: Optional[float]


class AnnotationMetaDict(TypedDict):
    tool_version: str
    config_hash: str


class AnnotationFileDict(TypedDict):
    """Annotation file written by ``scgkit delineate``."""
    fs: float
    beats: List[AnnotationBeatDict]
    meta: AnnotationMetaDict


class TruthFileDict(TypedDict, total=False):
    """Ground-truth file written by ``scgkit synth``."""
    fs: float
    label: str
    beats: List[Dict[str, int]]
    ppg_peaks: List[int]
    seed: int
    meta: NotRequired[Dict[str, Any]]
