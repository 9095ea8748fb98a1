"""
Tests for the scgkit command line and its file formats.

Commands are run in-process with click's CliRunner against files in
pytest's tmp_path.
"""

import json

import numpy as np
import pytest
from click.testing import CliRunner

from scgkit.__main__ import cli
from scgkit.analysis import detection_metrics, summarize_reports
from scgkit.cli import (
    clip_range,
    format_record,
    read_annotations,
    read_json,
    read_record,
    render_svg,
    write_annotations,
    write_atomic,
    write_json,
    write_record,
)
from scgkit.cli.report import detection_table, feature_stats_csv, records_table, render
from scgkit.core.errors import ParameterError, ParseError
from scgkit.core.types import FIDUCIALS, SampledSignal


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def record_files(tmp_path, clean_record):
    """The clean synthetic record as CSV plus its truth file."""
    csv_path = tmp_path / "clean.csv"
    truth_path = tmp_path / "clean.truth.json"
    write_record(csv_path, clean_record.scg, clean_record.ppg)
    write_json(truth_path, clean_record.truth.to_dict())
    return csv_path, truth_path


def error_of(result):
    """Decode the JSON error printed on stderr."""
    line = next(l for l in result.output.splitlines() if l.startswith("{"))
    return json.loads(line)


# ============================================================
# File formats
# ============================================================

class TestRecordFiles:
    def test_round_trip(self, tmp_path, rng):
        scg = SampledSignal(rng.normal(size=500), 500.0, "scg")
        ppg = SampledSignal(rng.normal(size=500), 500.0, "ppg")
        write_record(tmp_path / "r.csv", scg, ppg)
        data = read_record(tmp_path / "r.csv")
        assert data.name == "r"
        assert data.fs == 500.0
        np.testing.assert_allclose(data.scg.samples, scg.samples, rtol=1e-9)
        np.testing.assert_allclose(data.ppg.samples, ppg.samples, rtol=1e-9)
        assert data.ecg is None

    def test_header_and_ecg_column(self):
        sig = SampledSignal(np.zeros(3), 250.0)
        text = format_record(sig, sig, sig)
        lines = text.splitlines()
        assert lines[0] == "t,ppg,scg,ecg"
        assert lines[2].startswith("0.004000000,")

    def test_missing_column(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,scg\n0,1\n0.001,2\n")
        with pytest.raises(ParseError) as exc_info:
            read_record(path)
        assert exc_info.value.line == 1

    def test_malformed_row_line_number(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,ppg,scg\n0,1,2\n0.001,x,2\n0.002,1,2\n")
        with pytest.raises(ParseError) as exc_info:
            read_record(path)
        assert exc_info.value.line == 3

    def test_wrong_field_count(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,ppg,scg\n0,1,2\n0.001,1\n")
        with pytest.raises(ParseError) as exc_info:
            read_record(path)
        assert exc_info.value.line == 3

    def test_non_increasing_time(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,ppg,scg\n0,1,2\n0.001,1,2\n0.001,1,2\n")
        with pytest.raises(ParseError) as exc_info:
            read_record(path)
        assert exc_info.value.line == 4

    def test_uneven_step(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,ppg,scg\n0,1,2\n0.001,1,2\n0.003,1,2\n0.004,1,2\n")
        with pytest.raises(ParseError):
            read_record(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            read_record(tmp_path / "nope.csv")


class TestAnnotationFiles:
    def test_round_trip(self, tmp_path, regular_beats):
        path = tmp_path / "a.annotations.json"
        write_annotations(path, regular_beats, 1000.0, "1.0.0", "abc")
        fs, beats, meta = read_annotations(path)
        assert fs == 1000.0
        assert beats == regular_beats
        assert meta == {"tool_version": "1.0.0", "config_hash": "abc"}

    def test_nulls_for_missing_points(self, tmp_path, beat_factory):
        b = beat_factory()
        b.ao = None
        path = tmp_path / "a.json"
        write_annotations(path, [b], 1000.0, "1.0.0", "abc")
        assert read_json(path)["beats"][0]["ao"] is None

    def test_malformed(self, tmp_path):
        path = tmp_path / "a.json"
        path.write_text('{"beats": []}')
        with pytest.raises(ParseError):
            read_annotations(path)
        path.write_text("{not json")
        with pytest.raises(ParseError):
            read_json(path)

    def test_atomic_write_leaves_no_temp_files(self, tmp_path):
        target = tmp_path / "sub" / "out.txt"
        write_atomic(target, "one")
        write_atomic(target, "two")
        assert target.read_text() == "two"
        assert [p.name for p in target.parent.iterdir()] == ["out.txt"]


# ============================================================
# Reports and plots
# ============================================================

class TestReports:
    def test_detection_table(self):
        reports = {name: detection_metrics(9, 1, 1, name) for name in FIDUCIALS}
        text = render(detection_table("rec", reports))
        assert "pAC" in text
        assert "90.00" in text
        assert "81.82" in text

    def test_records_table_overall_row(self):
        per_record = [
            ("a", {name: detection_metrics(9, 1, 1, name) for name in FIDUCIALS}),
            ("b", {name: detection_metrics(10, 0, 0, name) for name in FIDUCIALS}),
        ]
        overall = summarize_reports([r for _, r in per_record])
        text = render(records_table("se", per_record, overall))
        assert "Overall" in text
        assert "95.00 ± 7.07" in text

    def test_render_is_plain_text(self):
        reports = {name: detection_metrics(1, 0, 0, name) for name in FIDUCIALS}
        text = render(detection_table("rec", reports))
        assert "\x1b[" not in text
        assert text == render(detection_table("rec", reports))

    def test_feature_stats_csv(self, separable_features):
        lines = feature_stats_csv(separable_features).splitlines()
        assert lines[0].startswith("feature,description,normal_mean")
        assert lines[1].startswith("f1,")
        assert len(lines) == 3


class TestPlot:
    def test_clip_range(self, mock_logger):
        assert clip_range(None, 20.0) == (0.0, 20.0)
        assert clip_range((-1.0, 5.0), 20.0, mock_logger) == (0.0, 5.0)
        assert mock_logger.warning.called

    @pytest.mark.parametrize("range_s", [(5.0, 5.0), (6.0, 5.0), (30.0, 40.0)])
    def test_invalid_range(self, range_s):
        with pytest.raises(ParameterError):
            clip_range(range_s, 20.0)

    def test_svg_ids_and_determinism(self, clean_record, clean_beats):
        svg = render_svg(clean_record.scg, clean_record.ppg, clean_beats, (2.0, 6.0), "clean")
        assert 'id="trace-ppg"' in svg
        assert 'id="trace-scg"' in svg
        for label in ("IM", "AO", "IC", "AC", "pAC", "MO"):
            assert f'id="marker-{label}"' in svg
        assert svg == render_svg(clean_record.scg, clean_record.ppg, clean_beats, (2.0, 6.0), "clean")


# ============================================================
# Commands
# ============================================================

class TestSynthCommand:
    def test_single(self, runner, tmp_path):
        result = runner.invoke(
            cli, ["synth", "--out", str(tmp_path), "--duration-s", "5", "--seed", "3", "--name", "demo"]
        )
        assert result.exit_code == 0, result.output
        data = read_record(tmp_path / "demo.csv")
        assert len(data.scg) == 5001
        truth = read_json(tmp_path / "demo.truth.json")
        assert truth["label"] == "normal"
        assert truth["seed"] == 3

    def test_dataset(self, runner, tmp_path):
        result = runner.invoke(
            cli, ["synth", "--out", str(tmp_path), "--mode", "dataset", "--n", "2", "--duration-s", "5"]
        )
        assert result.exit_code == 0, result.output
        names = sorted(p.name for p in tmp_path.glob("*.csv"))
        assert names == ["held_01.csv", "held_02.csv", "normal_01.csv", "normal_02.csv"]
        assert read_json(tmp_path / "held_01.truth.json")["label"] == "breathless"

    def test_config_file(self, runner, tmp_path):
        config = tmp_path / "synth.yaml"
        config.write_text("duration_s: 4\nhr_bpm: 60\n")
        result = runner.invoke(cli, ["synth", "--config", str(config), "--out", str(tmp_path)])
        assert result.exit_code == 0, result.output
        assert len(read_record(tmp_path / "synth.csv").scg) == 4001

    def test_unknown_setting(self, runner, tmp_path):
        config = tmp_path / "synth.yaml"
        config.write_text("heart_rate: 60\n")
        result = runner.invoke(cli, ["synth", "--config", str(config), "--out", str(tmp_path)])
        assert result.exit_code == 2
        assert error_of(result)["error"] == "ConfigurationError"


class TestDelineateCommand:
    def test_writes_annotations(self, runner, record_files):
        csv_path, _ = record_files
        result = runner.invoke(cli, ["delineate", str(csv_path)])
        assert result.exit_code == 0, result.output
        fs, beats, meta = read_annotations(csv_path.with_name("clean.annotations.json"))
        assert fs == 1000.0
        assert len(beats) > 10
        assert len(meta["config_hash"]) == 64

    def test_byte_identical_runs(self, runner, record_files, tmp_path):
        csv_path, _ = record_files
        first, second = tmp_path / "one.json", tmp_path / "two.json"
        assert runner.invoke(cli, ["delineate", str(csv_path), "--out", str(first)]).exit_code == 0
        assert runner.invoke(cli, ["delineate", str(csv_path), "--out", str(second)]).exit_code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_missing_record(self, runner, tmp_path):
        result = runner.invoke(cli, ["delineate", str(tmp_path / "nope.csv")])
        assert result.exit_code == 2
        assert "ParseError" in result.output

    def test_bad_csv(self, runner, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("t,ppg,scg\n0,1,2\n0.001,oops,2\n")
        result = runner.invoke(cli, ["delineate", str(path)])
        assert result.exit_code == 2
        error = error_of(result)
        assert error["error"] == "ParseError"
        assert error["line"] == 3

    def test_short_record(self, runner, tmp_path, rng):
        sig = SampledSignal(rng.normal(size=2001), 1000.0)
        path = tmp_path / "short.csv"
        write_record(path, sig, sig)
        result = runner.invoke(cli, ["delineate", str(path)])
        assert result.exit_code == 3
        assert error_of(result)["error"] == "InputError"

    def test_missing_config(self, runner, record_files, tmp_path):
        csv_path, _ = record_files
        result = runner.invoke(
            cli, ["delineate", str(csv_path), "--config", str(tmp_path / "none.yaml")]
        )
        assert result.exit_code == 2
        assert error_of(result)["error"] == "ConfigurationError"


class TestEvalCommand:
    def test_single_record(self, runner, record_files, tmp_path):
        csv_path, truth_path = record_files
        runner.invoke(cli, ["delineate", str(csv_path)])
        report = tmp_path / "report.json"
        result = runner.invoke(
            cli,
            ["eval", str(csv_path.with_name("clean.annotations.json")), str(truth_path), "--out", str(report)],
        )
        assert result.exit_code == 0, result.output
        assert "AO" in result.output
        assert "Se (%)" in result.output
        document = read_json(report)
        assert document["tol_ms"] == 50.0
        assert document["records"]["clean"]["ao"]["se"] >= 0.85

    def test_directories(self, runner, record_files, tmp_path):
        csv_path, _ = record_files
        annotations = tmp_path / "annotations"
        runner.invoke(cli, ["delineate", str(csv_path), "--out", str(annotations / "clean.annotations.json")])
        result = runner.invoke(cli, ["eval", str(annotations), str(tmp_path), "--tol-ms", "40"])
        assert result.exit_code == 0, result.output
        assert "clean (tol 40 ms)" in result.output

    def test_missing_truth_in_directory(self, runner, tmp_path, regular_beats):
        annotations = tmp_path / "annotations"
        truth = tmp_path / "truth"
        truth.mkdir()
        write_annotations(annotations / "x.annotations.json", regular_beats, 1000.0, "1", "h")
        result = runner.invoke(cli, ["eval", str(annotations), str(truth)])
        assert result.exit_code == 2


class TestPlotCommand:
    def test_svg(self, runner, record_files, tmp_path):
        csv_path, truth_path = record_files
        out = tmp_path / "clean.svg"
        result = runner.invoke(
            cli, ["plot", str(csv_path), str(truth_path), "--out", str(out), "--range-s", "0", "5"]
        )
        assert result.exit_code == 0, result.output
        svg = out.read_text()
        assert 'id="trace-scg"' in svg
        assert 'id="marker-AO"' in svg

    def test_inverted_range(self, runner, record_files, tmp_path):
        csv_path, truth_path = record_files
        result = runner.invoke(
            cli,
            ["plot", str(csv_path), str(truth_path), "--out", str(tmp_path / "x.svg"), "--range-s", "5", "1"],
        )
        assert result.exit_code == 3
        assert error_of(result)["error"] == "ParameterError"


class TestClassifyCommand:
    def test_end_to_end(self, runner, tmp_path):
        data = tmp_path / "data"
        out = tmp_path / "out"
        result = runner.invoke(
            cli, ["synth", "--out", str(data), "--mode", "dataset", "--n", "2", "--duration-s", "20"]
        )
        assert result.exit_code == 0, result.output
        result = runner.invoke(
            cli,
            [
                "classify", str(data),
                "--k-folds", "3",
                "--classifier", "svm-rbf",
                "--out", str(out),
            ],
        )
        assert result.exit_code == 0, result.output
        assert "svm-rbf" in result.output
        document = read_json(out / "classification.json")
        run = document["runs"][0]
        assert run["selected"] == [1, 2, 5, 6, 7, 9, 10, 11]
        assert len(run["classifiers"]["svm-rbf"]["folds"]) == 3
        assert (out / "roc_svm-rbf_selected.csv").exists()
        assert (out / "features.csv").read_text().startswith("feature,")

    def test_unknown_classifier(self, runner, tmp_path):
        result = runner.invoke(cli, ["classify", str(tmp_path), "--classifier", "forest"])
        assert result.exit_code == 2
        assert error_of(result)["error"] == "ConfigurationError"

    def test_single_class(self, runner, tmp_path):
        runner.invoke(cli, ["synth", "--out", str(tmp_path), "--duration-s", "5"])
        result = runner.invoke(cli, ["classify", str(tmp_path)])
        assert result.exit_code == 3
        assert error_of(result)["error"] == "InputError"


class TestInitConfig:
    def test_writes_defaults(self, runner, tmp_path):
        from scgkit.core.config import DelineatorConfig

        path = tmp_path / "scgkit.yaml"
        result = runner.invoke(cli, ["init-config", str(path)])
        assert result.exit_code == 0
        assert DelineatorConfig.load(path) == DelineatorConfig()
