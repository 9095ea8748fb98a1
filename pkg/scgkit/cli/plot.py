"""
Static SVG plots of annotated records.

The PPG and SCG traces share the time axis; every fiducial type is one
marker group labelled IM, AO, IC, AC, pAC or MO. Element ids are fixed
and the SVG carries no date, so equal inputs give equal files.
"""

import io
from typing import Optional, Sequence, Tuple

import matplotlib
import numpy as np
from matplotlib.backends.backend_svg import FigureCanvasSVG
from matplotlib.figure import Figure

from .io import PathLike, write_atomic
from ..core.errors import ParameterError
from ..core.interfaces import LoggerProtocol
from ..core.types import FIDUCIAL_LABELS, FIDUCIALS, BeatAnnotation, SampledSignal

MARKERS = {"im": "v", "ao": "^", "ic": "v", "ac": "o", "pac": "s", "mo": "D"}
COLORS = {
    "im": "tab:purple",
    "ao": "tab:red",
    "ic": "tab:orange",
    "ac": "tab:blue",
    "pac": "tab:green",
    "mo": "tab:brown",
}

SVG_RC = {"svg.hashsalt": "scgkit", "svg.fonttype": "none", "path.simplify": False}


def clip_range(
    range_s: Optional[Tuple[float, float]],
    duration_s: float,
    logger: Optional[LoggerProtocol] = None,
) -> Tuple[float, float]:
    """
    Clip a (start, stop) range in seconds to the record.

    Raises:
        ParameterError: If start >= stop, before or after clipping
    """
    if range_s is None:
        return 0.0, duration_s
    start, stop = range_s
    if start >= stop:
        raise ParameterError("range_s", range_s, "start < stop")
    clipped = (max(0.0, start), min(duration_s, stop))
    if clipped != (start, stop) and logger:
        logger.warning(
            f"range {start:g}-{stop:g} s clipped to record bounds {clipped[0]:g}-{clipped[1]:g} s"
        )
    if clipped[0] >= clipped[1]:
        raise ParameterError("range_s", range_s, f"overlap with the record (0-{duration_s:g} s)")
    return clipped


def render_svg(
    scg: SampledSignal,
    ppg: SampledSignal,
    beats: Sequence[BeatAnnotation],
    range_s: Optional[Tuple[float, float]] = None,
    title: str = "",
    logger: Optional[LoggerProtocol] = None,
) -> str:
    """SVG text of the annotated traces."""
    fs = scg.fs
    # The last sample sits at (n - 1) / fs
    start_s, stop_s = clip_range(range_s, (len(scg) - 1) / fs, logger)
    lo = int(np.ceil(start_s * fs))
    hi = int(np.floor(stop_s * fs)) + 1
    t = np.arange(lo, hi) / fs

    with matplotlib.rc_context(SVG_RC):
        figure = Figure(figsize=(12, 5))
        FigureCanvasSVG(figure)
        ax_ppg, ax_scg = figure.subplots(2, 1, sharex=True)

        ax_ppg.plot(t, ppg.samples[lo:hi], color="black", linewidth=0.8, gid="trace-ppg")
        ax_scg.plot(t, scg.samples[lo:hi], color="black", linewidth=0.8, gid="trace-scg")
        ax_ppg.set_ylabel("PPG")
        ax_scg.set_ylabel("SCG")
        ax_scg.set_xlabel("Time (s)")
        if title:
            ax_ppg.set_title(title)

        for name in FIDUCIALS:
            indices = np.array(
                [getattr(b, name) for b in beats if getattr(b, name) is not None], dtype=np.int64
            )
            indices = indices[(indices >= lo) & (indices < hi)]
            if indices.size == 0:
                continue
            ax_scg.plot(
                indices / fs,
                scg.samples[indices],
                linestyle="none",
                marker=MARKERS[name],
                markersize=5,
                color=COLORS[name],
                label=FIDUCIAL_LABELS[name],
                gid=f"marker-{FIDUCIAL_LABELS[name]}",
            )
        if ax_scg.get_legend_handles_labels()[0]:
            ax_scg.legend(loc="upper right", ncol=6, fontsize="small")

        figure.tight_layout()
        buffer = io.StringIO()
        figure.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def plot_record(
    out_svg: PathLike,
    scg: SampledSignal,
    ppg: SampledSignal,
    beats: Sequence[BeatAnnotation],
    range_s: Optional[Tuple[float, float]] = None,
    title: str = "",
    logger: Optional[LoggerProtocol] = None,
) -> None:
    write_atomic(out_svg, render_svg(scg, ppg, beats, range_s, title, logger))
