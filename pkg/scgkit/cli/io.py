"""
Record, annotation and report files.

Records are CSV files with the header ``t,ppg,scg`` (optionally
``,ecg``); ``t`` is in seconds with a uniform step from which fs is
derived. Annotations, ground truth and reports are JSON documents
written with two-space indentation. Every file is written atomically
(temporary file in the target directory, then rename).
"""

import io
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.errors import ParseError
from ..core.types import AnnotationFileDict, BeatAnnotation, SampledSignal

PathLike = Union[str, Path]

REQUIRED_COLUMNS = ("t", "ppg", "scg")
OPTIONAL_COLUMNS = ("ecg",)
STEP_TOLERANCE_S = 1e-6


@dataclass
class RecordData:
    """A synchronized record loaded from CSV."""

    name: str
    fs: float
    scg: SampledSignal
    ppg: SampledSignal
    ecg: Optional[SampledSignal] = None


def write_atomic(path: PathLike, text: str) -> None:
    """Write text to ``path`` through a temporary file and a rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def write_json(path: PathLike, data: Any) -> None:
    write_atomic(path, dump_json(data))


def read_json(path: PathLike) -> Dict[str, Any]:
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError:
        raise ParseError("file not found", path=str(path))
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, path=str(path), line=e.lineno)


# ============================================================
# Records
# ============================================================

def read_record(path: PathLike) -> RecordData:
    """
    Load a record CSV.

    Raises:
        ParseError: On a missing column, a malformed row, a non-increasing
            or non-uniform time column (the message names the line)
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except FileNotFoundError:
        raise ParseError("file not found", path=str(path))

    if not lines:
        raise ParseError("empty file", path=str(path), line=1)
    header = [h.strip() for h in lines[0].split(",")]
    missing = [c for c in REQUIRED_COLUMNS if c not in header]
    if missing:
        raise ParseError(f"missing column(s) {', '.join(missing)}", path=str(path), line=1)
    unknown = [c for c in header if c not in REQUIRED_COLUMNS + OPTIONAL_COLUMNS]
    if unknown or len(set(header)) != len(header):
        raise ParseError(f"unexpected header {lines[0]!r}", path=str(path), line=1)

    rows: List[List[float]] = []
    row_lines: List[int] = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split(",")
        if len(fields) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, got {len(fields)}", path=str(path), line=number
            )
        try:
            rows.append([float(v) for v in fields])
            row_lines.append(number)
        except ValueError as e:
            raise ParseError(str(e), path=str(path), line=number)

    if len(rows) < 2:
        raise ParseError("need at least 2 samples", path=str(path))
    data = np.asarray(rows, dtype=np.float64)
    if not np.all(np.isfinite(data)):
        bad = int(np.flatnonzero(~np.all(np.isfinite(data), axis=1))[0])
        raise ParseError("non-finite value", path=str(path), line=row_lines[bad])

    columns = {name: data[:, i] for i, name in enumerate(header)}
    fs = _sampling_rate(columns["t"], path, row_lines)
    ecg = columns.get("ecg")
    return RecordData(
        name=path.stem,
        fs=fs,
        scg=SampledSignal(columns["scg"], fs, "scg"),
        ppg=SampledSignal(columns["ppg"], fs, "ppg"),
        ecg=None if ecg is None else SampledSignal(ecg, fs, "ecg"),
    )


def _sampling_rate(t: np.ndarray, path: Path, row_lines: Sequence[int]) -> float:
    steps = np.diff(t)
    nonincreasing = np.flatnonzero(steps <= 0)
    if nonincreasing.size:
        line = row_lines[int(nonincreasing[0]) + 1]
        raise ParseError("t is not strictly increasing", path=str(path), line=line)
    nominal = (t[-1] - t[0]) / (t.size - 1)
    deviation = np.abs(steps - nominal)
    uneven = np.flatnonzero(deviation >= STEP_TOLERANCE_S)
    if uneven.size:
        line = row_lines[int(uneven[0]) + 1]
        raise ParseError(f"t step deviates from {nominal:.9f} s", path=str(path), line=line)
    return round(1.0 / nominal, 6)


def format_record(
    scg: SampledSignal, ppg: SampledSignal, ecg: Optional[SampledSignal] = None
) -> str:
    """CSV text of a record; ``t`` restarts at 0 with step 1/fs."""
    if len(scg) != len(ppg) or scg.fs != ppg.fs:
        raise ParseError("scg and ppg must share length and fs")
    columns = [np.arange(len(scg)) / scg.fs, ppg.samples, scg.samples]
    header = "t,ppg,scg"
    if ecg is not None:
        columns.append(ecg.samples)
        header += ",ecg"
    buffer = io.StringIO()
    np.savetxt(
        buffer,
        np.column_stack(columns),
        fmt=["%.9f"] + ["%.10g"] * (len(columns) - 1),
        delimiter=",",
        header=header,
        comments="",
    )
    return buffer.getvalue()


def write_record(
    path: PathLike, scg: SampledSignal, ppg: SampledSignal, ecg: Optional[SampledSignal] = None
) -> None:
    write_atomic(path, format_record(scg, ppg, ecg))


# ============================================================
# Annotations
# ============================================================

def annotation_document(
    beats: Sequence[BeatAnnotation], fs: float, tool_version: str, config_hash: str
) -> AnnotationFileDict:
    return {
        "fs": fs,
        "beats": [beat.to_dict() for beat in beats],
        "meta": {"tool_version": tool_version, "config_hash": config_hash},
    }


def write_annotations(
    path: PathLike,
    beats: Sequence[BeatAnnotation],
    fs: float,
    tool_version: str,
    config_hash: str,
) -> None:
    write_json(path, annotation_document(beats, fs, tool_version, config_hash))


def read_annotations(path: PathLike) -> Tuple[float, List[BeatAnnotation], Dict[str, Any]]:
    """
    Load an annotation (or ground-truth) file.

    Returns:
        (fs, beats, meta)

    Raises:
        ParseError: If fs or beats are missing or malformed
    """
    data = read_json(path)
    if not isinstance(data, dict) or "fs" not in data or "beats" not in data:
        raise ParseError("expected an object with 'fs' and 'beats'", path=str(path))
    try:
        fs = float(data["fs"])
        beats = [BeatAnnotation.from_dict(beat) for beat in data["beats"]]
    except (TypeError, ValueError, AttributeError) as e:
        raise ParseError(f"malformed annotation: {e}", path=str(path))
    return fs, beats, data.get("meta", {})
