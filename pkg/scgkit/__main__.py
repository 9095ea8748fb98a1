"""
CLI for scgkit

Usage:
    scgkit delineate record.csv --out record.annotations.json
    scgkit synth --out data/ --mode dataset --n 8
    scgkit eval annotations/ truth/
    scgkit classify data/ --features selected --classifier svm-rbf
    scgkit plot record.csv record.annotations.json --out record.svg
"""

import functools
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import click

from . import __version__
from .core.config import DelineatorConfig
from .core.errors import ConfigurationError, InputError, ParseError, ScgKitError
from .log import PipelineLogger

ANNOTATION_SUFFIX = ".annotations.json"
TRUTH_SUFFIX = ".truth.json"


def handle_errors(command):
    """Print library errors as JSON on stderr and exit with their code."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ScgKitError as e:
            click.echo(json.dumps(e.to_dict()), err=True)
            sys.exit(e.exit_code)

    return wrapper


def _load_config(config_path: Optional[str], overrides: Dict[str, object]) -> DelineatorConfig:
    if config_path:
        try:
            config = DelineatorConfig.load(config_path)
        except FileNotFoundError as e:
            raise ConfigurationError(str(e), field="config", value=config_path)
    else:
        config = DelineatorConfig()
    return config.with_overrides(overrides)


def _logger(config: DelineatorConfig) -> PipelineLogger:
    return PipelineLogger.from_name(config.log_level)


def _record_stem(path: Path, suffix: str) -> str:
    name = path.name
    return name[: -len(suffix)] if name.endswith(suffix) else path.stem


def _pair_files(annotation: Path, truth: Path) -> List[Tuple[str, Path, Path]]:
    if annotation.is_dir() != truth.is_dir():
        raise InputError("annotation and truth must both be files or both be directories")
    if not annotation.is_dir():
        return [(_record_stem(annotation, ANNOTATION_SUFFIX), annotation, truth)]
    pairs = []
    for path in sorted(annotation.glob(f"*{ANNOTATION_SUFFIX}")):
        stem = _record_stem(path, ANNOTATION_SUFFIX)
        reference = truth / f"{stem}{TRUTH_SUFFIX}"
        if not reference.exists():
            raise ParseError("no matching ground-truth file", path=str(reference))
        pairs.append((stem, path, reference))
    if not pairs:
        raise InputError(f"no *{ANNOTATION_SUFFIX} files in {annotation}")
    return pairs


@click.group()
@click.version_option(__version__, prog_name="scgkit")
def cli():
    """scgkit CLI - PPG-guided SCG delineation and breathlessness analysis"""
    pass


@cli.command("init-config")
@click.argument("path", type=click.Path(dir_okay=False))
def init_config(path: str):
    """Write a configuration file holding every key at its default value."""
    DelineatorConfig.create_default(path)
    click.echo(f"Configuration written to {path}")


@cli.command()
@click.argument("record", type=click.Path(dir_okay=False))
@click.option("--config", "config_path", default=None, help="YAML configuration file")
@click.option("--out", default=None, help="Annotation file (default: <record>.annotations.json)")
@click.option("--window-s", type=float, default=None, help="Processing window length in seconds")
@click.option("--log-level", type=click.Choice(["minimal", "info", "debug"]), default=None)
@handle_errors
def delineate(
    record: str,
    config_path: Optional[str],
    out: Optional[str],
    window_s: Optional[float],
    log_level: Optional[str],
):
    """Delineate IM, AO, IC, AC, pAC and MO in a record CSV."""
    from .cli.io import read_record, write_annotations
    from .engine import Delineator

    config = _load_config(config_path, {"window_s": window_s, "log_level": log_level})
    data = read_record(record)
    logger = _logger(config).for_record(data.name)
    beats = Delineator(config=config, logger=logger).delineate(data.scg, data.ppg)

    out_path = Path(out) if out else Path(record).with_name(f"{data.name}{ANNOTATION_SUFFIX}")
    write_annotations(out_path, beats, data.fs, __version__, config.config_hash())
    logger.success(f"{len(beats)} beats written to {out_path}")


@cli.command()
@click.option("--config", "config_path", default=None, help="YAML file of generator settings")
@click.option("--out", default=".", help="Output directory")
@click.option("--mode", type=click.Choice(["single", "dataset"]), default="single")
@click.option("--n", "n_records", type=int, default=8, help="Records per class (dataset mode)")
@click.option("--seed", type=int, default=None)
@click.option("--duration-s", type=float, default=None)
@click.option("--snr-db", type=float, default=None)
@click.option("--hr-bpm", type=float, default=None)
@click.option("--breath-mode", type=click.Choice(["normal", "held"]), default=None)
@click.option("--name", default="synth", help="Record name (single mode)")
@handle_errors
def synth(
    config_path: Optional[str],
    out: str,
    mode: str,
    n_records: int,
    seed: Optional[int],
    duration_s: Optional[float],
    snr_db: Optional[float],
    hr_bpm: Optional[float],
    breath_mode: Optional[str],
    name: str,
):
    """Generate synthetic records with ground-truth annotations."""
    import yaml

    from .cli.io import write_json, write_record
    from .synth import SynthConfig, generate, generate_dataset

    settings: Dict[str, object] = {}
    if config_path:
        try:
            with open(config_path) as f:
                settings = yaml.safe_load(f) or {}
        except FileNotFoundError as e:
            raise ConfigurationError(str(e), field="config", value=config_path)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Failed to parse YAML: {e}", field="file", value=config_path)
        if not isinstance(settings, dict):
            raise ConfigurationError("Config must be a mapping", value=config_path)
    overrides = {
        "seed": seed,
        "duration_s": duration_s,
        "snr_db": snr_db,
        "hr_bpm": hr_bpm,
        "breath_mode": breath_mode,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})
    try:
        cfg = SynthConfig.from_dict(settings)
    except (TypeError, ValueError) as e:
        raise ConfigurationError(str(e), field="synth")

    if mode == "single":
        records = [generate(cfg, name=name)]
    else:
        records = generate_dataset(cfg, n_records=n_records)

    out_dir = Path(out)
    for record in records:
        write_record(out_dir / f"{record.name}.csv", record.scg, record.ppg)
        write_json(out_dir / f"{record.name}{TRUTH_SUFFIX}", record.truth.to_dict())
    click.echo(f"{len(records)} record(s) written to {out_dir}")


@cli.command("eval")
@click.argument("annotation", type=click.Path(exists=True))
@click.argument("truth", type=click.Path(exists=True))
@click.option("--tol-ms", type=float, default=None, help="Matching tolerance (default 50 ms)")
@click.option("--config", "config_path", default=None, help="YAML configuration file")
@click.option("--out", default=None, help="JSON report file")
@handle_errors
def evaluate(
    annotation: str,
    truth: str,
    tol_ms: Optional[float],
    config_path: Optional[str],
    out: Optional[str],
):
    """Score annotations against ground truth (Se, +P, Acc per fiducial)."""
    from .analysis import evaluate_beats, summarize_reports
    from .cli.io import read_annotations, write_json
    from .cli.report import detection_document, detection_table, records_table, render

    config = _load_config(config_path, {"tol_ms": tol_ms})
    per_record = []
    for stem, annotation_path, truth_path in _pair_files(Path(annotation), Path(truth)):
        fs, beats, _ = read_annotations(annotation_path)
        truth_fs, reference, _ = read_annotations(truth_path)
        if fs != truth_fs:
            raise InputError(f"{stem}: annotation fs {fs} differs from truth fs {truth_fs}")
        per_record.append((stem, evaluate_beats(beats, reference, config.tol_ms, fs)))

    overall = summarize_reports([reports for _, reports in per_record])
    if len(per_record) == 1:
        stem, reports = per_record[0]
        click.echo(render(detection_table(f"{stem} (tol {config.tol_ms:g} ms)", reports)), nl=False)
    else:
        for metric in ("se", "pp", "acc"):
            click.echo(render(records_table(metric, per_record, overall)), nl=False)

    if out:
        write_json(out, detection_document(per_record, overall, config.tol_ms))


@cli.command()
@click.argument("records_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--config", "config_path", default=None, help="YAML configuration file")
@click.option(
    "--features",
    "feature_mode",
    type=click.Choice(["all", "selected", "ttest"]),
    default="selected",
    help="all twelve, the fixed selected set, or a t-test selection",
)
@click.option("--classifier", default="svm-rbf", help="Classifier kind, or 'all'")
@click.option("--k-folds", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--out", default=None, help="Directory for the report, ROC and feature CSVs")
@handle_errors
def classify(
    records_dir: str,
    config_path: Optional[str],
    feature_mode: str,
    classifier: str,
    k_folds: Optional[int],
    seed: Optional[int],
    out: Optional[str],
):
    """Delineate a labeled record set and cross-validate a breathlessness classifier."""
    from .analysis import (
        CLASSIFIER_ORDER,
        LabeledRecord,
        build_feature_dataset,
        run_classification,
    )
    from .classifiers import ClassifierRegistry
    from .cli.io import read_json, read_record, write_atomic, write_json
    from .cli.report import (
        classification_document,
        classification_table,
        feature_stats_csv,
        render,
        roc_csv,
    )
    from .synth import CLASS_NAMES

    config = _load_config(config_path, {"k_folds": k_folds, "seed": seed})
    logger = _logger(config)

    if classifier == "all":
        kinds = list(CLASSIFIER_ORDER)
        modes = ["all", "selected" if feature_mode == "all" else feature_mode]
    else:
        if not ClassifierRegistry.is_registered(classifier):
            raise ConfigurationError(
                f"unknown classifier (choose from all, {', '.join(CLASSIFIER_ORDER)}, knn)",
                field="classifier",
                value=classifier,
            )
        kinds = [classifier]
        modes = [feature_mode]

    label_of = {name: label for label, name in CLASS_NAMES.items()}
    records = []
    for path in sorted(Path(records_dir).glob("*.csv")):
        truth_path = path.with_name(f"{path.stem}{TRUTH_SUFFIX}")
        meta = read_json(truth_path)
        if meta.get("label") not in label_of:
            raise ParseError(f"label must be one of {sorted(label_of)}", path=str(truth_path))
        data = read_record(path)
        records.append(LabeledRecord(data.name, data.scg, data.ppg, label_of[meta["label"]]))
    if not records:
        raise InputError(f"no record CSV files in {records_dir}")
    if len({r.label for r in records}) < 2:
        raise InputError("classification needs records of both classes")

    features = build_feature_dataset(records, config, logger)
    runs = [run_classification(features, kinds, mode, config, logger) for mode in modes]
    click.echo(render(classification_table(runs)), nl=False)

    if out:
        out_dir = Path(out)
        document = classification_document(runs, config.config_hash())
        write_json(out_dir / "classification.json", document)
        write_atomic(out_dir / "features.csv", feature_stats_csv(features))
        for run in runs:
            for kind in run.results:
                write_atomic(out_dir / f"roc_{kind}_{run.feature_mode}.csv", roc_csv(run, kind))


@cli.command()
@click.argument("record", type=click.Path(dir_okay=False))
@click.argument("annotation", type=click.Path(dir_okay=False))
@click.option("--out", required=True, help="SVG file to write")
@click.option("--range-s", nargs=2, type=float, default=None, help="START STOP in seconds")
@click.option("--log-level", type=click.Choice(["minimal", "info", "debug"]), default="info")
@handle_errors
def plot(
    record: str,
    annotation: str,
    out: str,
    range_s: Optional[Tuple[float, float]],
    log_level: str,
):
    """Plot PPG and SCG with the annotated fiducial points as SVG."""
    from .cli.io import read_annotations, read_record
    from .cli.plot import plot_record

    data = read_record(record)
    fs, beats, _ = read_annotations(annotation)
    if abs(fs - data.fs) > 1e-6 * data.fs:
        raise InputError(f"annotation fs {fs} differs from record fs {data.fs}")
    logger = PipelineLogger.from_name(log_level)
    plot_record(out, data.scg, data.ppg, beats, range_s or None, data.name, logger)


if __name__ == "__main__":
    cli()
