"""
Aligned text tables and JSON/CSV report documents.

Tables are rendered with rich into plain text (fixed width, no colour)
so that the same inputs always print the same bytes.
"""

import csv
import io
from typing import Any, Dict, List, Optional, Sequence, Tuple

from rich import box
from rich.console import Console
from rich.table import Table

from ..analysis.dataset import ClassificationRun
from ..analysis.detection import METRICS, DetectionReport, MetricSummary
from ..analysis.features import FEATURE_DESCRIPTIONS, FeatureMatrix
from ..analysis.validation import MeanSd
from ..core.types import FIDUCIAL_LABELS, FIDUCIALS

TABLE_WIDTH = 120

METRIC_HEADERS = {"se": "Se (%)", "pp": "+P (%)", "acc": "Acc (%)"}


def render(table: Table) -> str:
    """Plain-text rendering of a rich table."""
    console = Console(
        file=io.StringIO(),
        width=TABLE_WIDTH,
        color_system=None,
        force_terminal=False,
        legacy_windows=False,
    )
    console.print(table)
    return console.file.getvalue()


def _new_table(title: str, columns: Sequence[str]) -> Table:
    table = Table(title=title, box=box.ASCII, show_lines=False)
    for i, column in enumerate(columns):
        table.add_column(column, justify="left" if i == 0 else "right")
    return table


def percent(value: Optional[float]) -> str:
    return "n/a" if value is None else f"{100.0 * value:.2f}"


def percent_sd(summary: "MeanSd | MetricSummary") -> str:
    if summary.mean is None:
        return "n/a"
    return f"{100.0 * summary.mean:.2f} ± {100.0 * summary.sd:.2f}"


# ============================================================
# Detection
# ============================================================

def detection_table(title: str, reports: Dict[str, DetectionReport]) -> Table:
    table = _new_table(title, ["Fiducial", "TP", "FP", "FN", *METRIC_HEADERS.values()])
    for name in FIDUCIALS:
        r = reports[name]
        table.add_row(
            FIDUCIAL_LABELS[name], str(r.tp), str(r.fp), str(r.fn),
            percent(r.se), percent(r.pp), percent(r.acc),
        )
    return table


def records_table(
    metric: str,
    per_record: Sequence[Tuple[str, Dict[str, DetectionReport]]],
    overall: Dict[str, Dict[str, MetricSummary]],
) -> Table:
    """One metric for every record and fiducial, with an Overall mean ± sd row."""
    title = f"{METRIC_HEADERS[metric]} per record"
    table = _new_table(title, ["Record", *(FIDUCIAL_LABELS[n] for n in FIDUCIALS)])
    for name, reports in per_record:
        table.add_row(name, *(percent(getattr(reports[f], metric)) for f in FIDUCIALS))
    table.add_row("Overall", *(percent_sd(overall[f][metric]) for f in FIDUCIALS))
    return table


def detection_document(
    per_record: Sequence[Tuple[str, Dict[str, DetectionReport]]],
    overall: Dict[str, Dict[str, MetricSummary]],
    tol_ms: float,
) -> Dict[str, Any]:
    return {
        "tol_ms": tol_ms,
        "records": {
            name: {f: reports[f].to_dict() for f in FIDUCIALS} for name, reports in per_record
        },
        "overall": {
            f: {m: {"mean": s.mean, "sd": s.sd, "n": s.n} for m, s in overall[f].items()}
            for f in FIDUCIALS
        },
    }


# ============================================================
# Classification
# ============================================================

def classification_table(runs: Sequence[ClassificationRun]) -> Table:
    table = _new_table(
        "Breathlessness classification (k-fold CV)",
        ["Classifier", "Features", "ACC (%)", "TPR (%)", "FPR (%)", "AUC"],
    )
    for run in runs:
        label = "all" if run.feature_mode == "all" else "SF " + ",".join(map(str, run.selected))
        for kind, result in run.results.items():
            summary = result.summary()
            table.add_row(
                kind,
                label,
                percent_sd(summary["acc"]),
                percent_sd(summary["tpr"]),
                percent_sd(summary["fpr"]),
                f"{run.roc[kind].auc:.4f}",
            )
    return table


def classification_document(runs: Sequence[ClassificationRun], config_hash: str) -> Dict[str, Any]:
    document: Dict[str, Any] = {"config_hash": config_hash, "runs": []}
    for run in runs:
        entry: Dict[str, Any] = {
            "features": run.feature_mode,
            "selected": list(run.selected),
            "classifiers": {},
        }
        for kind, result in run.results.items():
            summary = result.summary()
            entry["classifiers"][kind] = {
                "folds": [fold.to_dict() for fold in result.folds],
                "mean": {name: s.mean for name, s in summary.items()},
                "sd": {name: s.sd for name, s in summary.items()},
                "auc": run.roc[kind].auc,
            }
        document["runs"].append(entry)
    return document


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def roc_csv(run: ClassificationRun, kind: str) -> str:
    curve = run.roc[kind]
    rows = [
        (f"{t:.10g}", f"{f:.10g}", f"{r:.10g}")
        for t, f, r in zip(curve.thresholds, curve.fpr, curve.tpr)
    ]
    return _csv_text(["threshold", "fpr", "tpr"], rows)


def feature_stats_csv(features: FeatureMatrix) -> str:
    """Per-class mean and sd of every normalized feature."""
    stats = features.class_statistics()
    rows: List[Tuple[str, ...]] = []
    for column, name in enumerate(features.names):
        rows.append(
            (
                name,
                FEATURE_DESCRIPTIONS.get(name, ""),
                f"{stats[0]['mean'][column]:.6f}",
                f"{stats[0]['sd'][column]:.6f}",
                f"{stats[1]['mean'][column]:.6f}",
                f"{stats[1]['sd'][column]:.6f}",
            )
        )
    return _csv_text(
        ["feature", "description", "normal_mean", "normal_sd", "breathless_mean", "breathless_sd"],
        rows,
    )
