"""
Exponential-ratio envelope transfer characteristic.

For inputs normalized to [0, 1] the characteristic

    y(x; p, q) = (1 - exp(-q x)) / (1 + p exp(-q x))

maps small values towards zero and saturates large ones, turning a
normalized energy-like series into sharp impulses at its dominant peaks.
``fit_pq`` recovers (p, q) from a desired piecewise-linear characteristic
by an exhaustive integer grid search.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..core.errors import InputError, ParameterError
from ..core.types import SampledSignal
from ..dsp.filters import NormalizeMode, normalize_unit

FIT_GRID_STEP = 0.001


@dataclass(frozen=True)
class EnvelopeModel:
    """
    Parameters of the transfer characteristic.

    Attributes:
        p: Natural number >= 1
        q: Natural number >= 1
    """

    p: int = 39
    q: int = 16

    def __post_init__(self):
        for name in ("p", "q"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise ParameterError(name, value, "natural number >= 1")
            object.__setattr__(self, name, int(value))

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """Closed-form y(x) without range checks."""
        x = np.asarray(x, dtype=np.float64)
        decay = np.exp(-self.q * x)
        # expm1 keeps full relative precision near x = 0
        return -np.expm1(-self.q * x) / (1.0 + self.p * decay)


@dataclass(frozen=True)
class TargetCurve:
    """
    Piecewise-linear desired characteristic on [0, 1].

    Attributes:
        breakpoints: (x, y) pairs with x strictly increasing from 0 to 1
            and every y in [0, 1]
    """

    breakpoints: Tuple[Tuple[float, float], ...] = ((0.0, 0.0), (0.3, 1.0), (1.0, 1.0))

    def __post_init__(self):
        points = tuple((float(x), float(y)) for x, y in self.breakpoints)
        xs = [x for x, _ in points]
        ys = [y for _, y in points]
        if len(points) < 2 or xs[0] != 0.0 or xs[-1] != 1.0:
            raise ParameterError("breakpoints", self.breakpoints, "x running from 0 to 1")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ParameterError("breakpoints", self.breakpoints, "strictly increasing x")
        if any(y < 0.0 or y > 1.0 for y in ys):
            raise ParameterError("breakpoints", self.breakpoints, "y within [0, 1]")
        object.__setattr__(self, "breakpoints", points)

    def sample(self, x: np.ndarray) -> np.ndarray:
        xs, ys = zip(*self.breakpoints)
        return np.interp(x, xs, ys)

    @classmethod
    def from_model(cls, model: EnvelopeModel, n_points: int = 1001) -> "TargetCurve":
        """Densely sampled characteristic of an existing model."""
        xs = np.linspace(0.0, 1.0, n_points)
        ys = model.evaluate(xs)
        return cls(tuple(zip(xs.tolist(), ys.tolist())))


def _check_unit_range(signal: SampledSignal) -> None:
    signal.require_nonempty()
    x = signal.samples
    if x.min() < 0.0 or x.max() > 1.0:
        raise InputError(
            f"samples must lie in [0, 1], got [{x.min():.6g}, {x.max():.6g}]", signal.label
        )


def transfer_envelope(signal01: SampledSignal, model: EnvelopeModel = EnvelopeModel()) -> SampledSignal:
    """
    Apply the transfer characteristic pointwise.

    Args:
        signal01: Signal with every sample in [0, 1]
        model: Characteristic parameters (default p=39, q=16)

    Returns:
        Signal with samples in [0, y(1)), monotone in the input

    Raises:
        InputError: If any sample lies outside [0, 1]

    Example:
        >>> y = transfer_envelope(SampledSignal([0.0, 0.5, 1.0], 1000.0))
        >>> y.samples.round(5).tolist()
        [0.0, 0.98675, 1.0]
    """
    _check_unit_range(signal01)
    return signal01.with_samples(model.evaluate(signal01.samples))


def rectify_and_transfer(
    signal: SampledSignal, model: EnvelopeModel = EnvelopeModel()
) -> SampledSignal:
    """Min-max normalize a signed series to [0, 1], then apply the characteristic."""
    return transfer_envelope(normalize_unit(signal, NormalizeMode.MIN_MAX), model)


def fit_pq(
    target: TargetCurve = TargetCurve(),
    p_range: Sequence[int] = (1, 100),
    q_range: Sequence[int] = (1, 50),
    step: float = FIT_GRID_STEP,
) -> Tuple[EnvelopeModel, float]:
    """
    Least-squares grid search for (p, q).

    The target is sampled on a uniform x-grid; every integer pair in the
    inclusive ranges is scored by its sum of squared residuals. Ties go to
    the smaller p, then the smaller q.

    Args:
        target: Desired characteristic
        p_range: Inclusive (low, high) bounds for p
        q_range: Inclusive (low, high) bounds for q
        step: x-grid spacing

    Returns:
        Best model and the Pearson correlation between fitted and target curves

    Raises:
        ParameterError: If a range is empty or the target is constant

    Example:
        >>> model, r = fit_pq()
        >>> r > 0.95
        True
    """
    p_lo, p_hi = (int(v) for v in p_range)
    q_lo, q_hi = (int(v) for v in q_range)
    if p_lo < 1 or p_hi < p_lo:
        raise ParameterError("p_range", tuple(p_range), "non-empty range of natural numbers")
    if q_lo < 1 or q_hi < q_lo:
        raise ParameterError("q_range", tuple(q_range), "non-empty range of natural numbers")

    xs = np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)
    wanted = target.sample(xs)
    if np.ptp(wanted) == 0.0:
        raise ParameterError("target", target.breakpoints, "non-constant characteristic")

    ps = np.arange(p_lo, p_hi + 1, dtype=np.float64)
    qs = np.arange(q_lo, q_hi + 1, dtype=np.float64)

    # shape (q, x): decay terms reused for every p
    decay = np.exp(-qs[:, None] * xs[None, :])
    rise = -np.expm1(-qs[:, None] * xs[None, :])
    ssr = np.empty((ps.size, qs.size), dtype=np.float64)
    for i, p in enumerate(ps):
        fitted = rise / (1.0 + p * decay)
        ssr[i] = np.sum((fitted - wanted) ** 2, axis=1)

    # argmin returns the first minimum in row-major order: smallest p, then q
    best_p, best_q = np.unravel_index(int(np.argmin(ssr)), ssr.shape)
    model = EnvelopeModel(p=int(ps[best_p]), q=int(qs[best_q]))
    correlation = float(np.corrcoef(model.evaluate(xs), wanted)[0, 1])
    return model, correlation
