"""
Shannon entropy and Shannon energy envelopes.

Both are computed with ``scipy.special.entr`` (``-x log x`` with the
``0 log 0 = 0`` convention, natural logarithm).
"""

from typing import Tuple

import numpy as np
from scipy.special import entr

from ..core.errors import InputError
from ..core.types import SampledSignal


def shannon_envelopes(signal01: SampledSignal) -> Tuple[SampledSignal, SampledSignal]:
    """
    Shannon entropy (SE) and Shannon energy (SEE) envelopes.

    SE[n] = -x log x and SEE[n] = -x^2 log x^2.

    Raises:
        InputError: If any sample lies outside [0, 1]

    Example:
        >>> se, see = shannon_envelopes(SampledSignal([0.0, 1.0], 1000.0))
        >>> se.samples.tolist(), see.samples.tolist()
        ([0.0, 0.0], [0.0, 0.0])
    """
    signal01.require_nonempty()
    x = signal01.samples
    if x.min() < 0.0 or x.max() > 1.0:
        raise InputError("samples must lie in [0, 1]", signal01.label)
    se = entr(x)
    see = entr(np.square(x))
    return (
        SampledSignal(se, signal01.fs, f"{signal01.label}-se"),
        SampledSignal(see, signal01.fs, f"{signal01.label}-see"),
    )
