"""
scgkit CLI package.

File formats (record CSV, annotation JSON), report tables and SVG
plotting used by the ``scgkit`` commands.
"""

from .io import (
    RecordData,
    format_record,
    read_annotations,
    read_json,
    read_record,
    write_annotations,
    write_atomic,
    write_json,
    write_record,
)
from .plot import clip_range, plot_record, render_svg
from .report import render

__all__ = [
    "RecordData",
    "format_record",
    "read_annotations",
    "read_json",
    "read_record",
    "write_annotations",
    "write_atomic",
    "write_json",
    "write_record",
    "clip_range",
    "plot_record",
    "render_svg",
    "render",
]
