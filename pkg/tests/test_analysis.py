"""
Tests for detection scoring, feature extraction and selection,
cross-validation, ROC analysis and the record-set pipeline.
"""

import numpy as np
import pytest

from scgkit.analysis import (
    FIXED_FEATURE_SET,
    FeatureMatrix,
    LabeledRecord,
    MatchCounts,
    build_feature_dataset,
    classification_metrics,
    cross_validate,
    detection_metrics,
    evaluate_beats,
    extract_features,
    feature_pvalues,
    match_detections,
    roc_curve,
    run_classification,
    select_features,
    summarize_reports,
)
from scgkit.analysis.features import beat_features
from scgkit.core.config import DelineatorConfig
from scgkit.core.errors import InputError, ParameterError
from scgkit.core.types import FIDUCIALS, SampledSignal
from scgkit.synth import SynthConfig, generate_dataset

AMPLITUDES = {"im": -0.5, "ao": 1.0, "ic": -0.6, "ac": -0.6, "pac": 0.8, "mo": -0.5}


def scg_for(beats, n=10000):
    """SCG that is zero except at the fiducials of ``beats``."""
    x = np.zeros(n)
    for b in beats:
        for name, value in AMPLITUDES.items():
            x[getattr(b, name)] = value
    return SampledSignal(x, 1000.0, "scg")


# ============================================================
# Detection scoring
# ============================================================

class TestMatchDetections:
    def test_docstring_example(self):
        assert match_detections([5012, 5020], [5000], tol_ms=50, fs=1000) == MatchCounts(1, 1, 0)

    def test_outside_tolerance(self):
        assert match_detections([5051], [5000], tol_ms=50, fs=1000) == MatchCounts(0, 1, 1)

    def test_tolerance_is_inclusive(self):
        assert match_detections([5050], [5000], tol_ms=50, fs=1000) == MatchCounts(1, 0, 0)

    def test_one_to_one_pairing(self):
        assert match_detections([1000, 1040], [1010, 1050], 30, 1000) == MatchCounts(2, 0, 0)

    def test_tolerance_in_samples_follows_fs(self):
        assert match_detections([520], [500], tol_ms=50, fs=500) == MatchCounts(1, 0, 0)
        assert match_detections([530], [500], tol_ms=50, fs=500) == MatchCounts(0, 1, 1)

    def test_empty_inputs(self):
        assert match_detections([], [100, 200], 50, 1000) == MatchCounts(0, 0, 2)
        assert match_detections([100], [], 50, 1000) == MatchCounts(0, 1, 0)

    def test_invalid_tolerance(self):
        with pytest.raises(ParameterError):
            match_detections([1], [1], tol_ms=0, fs=1000)


class TestDetectionMetrics:
    def test_docstring_values(self):
        report = detection_metrics(9, 1, 1)
        assert report.se == 0.9
        assert report.pp == 0.9
        assert report.acc == 0.8181818181818182

    def test_zero_denominator_is_none(self):
        report = detection_metrics(0, 0, 0)
        assert report.se is None and report.pp is None and report.acc is None
        assert detection_metrics(0, 3, 0).se is None
        assert detection_metrics(0, 3, 0).pp == 0.0

    def test_negative_count(self):
        with pytest.raises(ParameterError):
            detection_metrics(1, -1, 0)

    def test_dict_round_trip(self):
        report = detection_metrics(4, 1, 2, "ao")
        assert type(report).from_dict(report.to_dict()) == report

    @pytest.mark.parametrize("tp,fp,fn", [(9, 1, 1), (3, 7, 0), (0, 2, 5), (40, 0, 13), (1, 1, 1)])
    def test_accuracy_bounded_by_se_and_pp(self, tp, fp, fn):
        report = detection_metrics(tp, fp, fn)
        assert report.acc <= min(report.se, report.pp)


class TestEvaluateBeats:
    def test_perfect(self, regular_beats):
        reports = evaluate_beats(regular_beats, regular_beats, tol_ms=50, fs=1000.0)
        assert set(reports) == set(FIDUCIALS)
        assert all(r.se == 1.0 and r.pp == 1.0 for r in reports.values())

    def test_partial_beats_count_per_fiducial(self, regular_beats, beat_factory):
        predicted = [beat_factory()] + regular_beats[1:]
        predicted[0].ao = None
        reports = evaluate_beats(predicted, regular_beats, tol_ms=50, fs=1000.0)
        assert (reports["ao"].tp, reports["ao"].fn) == (9, 1)
        assert reports["mo"].tp == 10

    def test_summarize(self):
        per_record = [
            {"ao": detection_metrics(9, 1, 1)},
            {"ao": detection_metrics(10, 0, 0)},
            {"ao": detection_metrics(0, 0, 0)},
        ]
        summary = summarize_reports(per_record)
        se = summary["ao"]["se"]
        assert se.n == 2
        assert se.mean == pytest.approx(0.95)
        assert se.sd == pytest.approx(np.std([0.9, 1.0], ddof=1))
        assert summary["im"]["se"].mean is None

    def test_summarize_single_record(self):
        summary = summarize_reports([{"ao": detection_metrics(3, 1, 0)}])
        assert summary["ao"]["pp"].sd == 0.0


# ============================================================
# Features
# ============================================================

class TestBeatFeatures:
    def test_values(self, beat_factory):
        b = beat_factory()
        row = beat_features(b, 1060, scg_for([b]).samples, 1000.0)
        assert row.tolist() == [60.0, 30.0, 60.0, 330.0, 370.0, 430.0, -0.5, 1.0, -0.6, -0.6, 0.8, -0.5]

    def test_long_interval_rejected(self, beat_factory):
        b = beat_factory()
        assert beat_features(b, 2061, scg_for([b]).samples, 1000.0) is None
        assert beat_features(b, 2060, scg_for([b]).samples, 1000.0) is not None

    def test_incomplete_beat(self, beat_factory):
        b = beat_factory()
        b.ic = None
        assert beat_features(b, 1060, scg_for([beat_factory()]).samples, 1000.0) is None

    def test_amplitudes_scale_free(self, beat_factory):
        b = beat_factory()
        scg = scg_for([b]).samples
        row = beat_features(b, 1060, scg, 1000.0)
        scaled = beat_features(b, 1060, 3.7 * scg, 1000.0)
        np.testing.assert_array_equal(scaled[:6], row[:6])
        np.testing.assert_allclose(scaled[6:], row[6:], rtol=1e-12)


class TestExtractFeatures:
    def test_rows_per_beat(self, regular_beats):
        X = extract_features(regular_beats, scg_for(regular_beats), label=1, group="rec", normalize=False)
        assert X.values.shape == (9, 12)
        assert X.names[0] == "f1" and X.names[-1] == "f12"
        assert set(X.labels.tolist()) == {1}
        assert set(X.groups.tolist()) == {"rec"}
        np.testing.assert_allclose(X.values[:, 0], 60.0)

    def test_segment_limit(self, regular_beats):
        X = extract_features(regular_beats, scg_for(regular_beats), segment_s=5.0, normalize=False)
        assert X.n_rows == 5

    def test_gap_drops_beat(self, regular_beats):
        beats = regular_beats[:3] + regular_beats[5:]
        X = extract_features(beats, scg_for(beats), normalize=False)
        assert X.n_rows == 6
        assert np.all(X.values[:, 0] == 60.0)

    def test_normalized_columns(self, beat_factory):
        beats = [beat_factory(offset=1000 * i + 10 * i * i) for i in range(6)]
        X = extract_features(beats, scg_for(beats))
        assert X.values.min() >= 0.0
        assert X.values.max() <= 1.0
        assert X.values[:, 0].max() == 1.0

    def test_needs_two_complete_beats(self, regular_beats):
        with pytest.raises(InputError):
            extract_features(regular_beats[:1], scg_for(regular_beats))


class TestFeatureMatrix:
    def test_select_keeps_order(self, separable_features):
        X = separable_features.select([2, 1])
        assert X.numbers == (2, 1)
        np.testing.assert_array_equal(X.values[:, 1], separable_features.values[:, 0])

    def test_select_missing(self, separable_features):
        with pytest.raises(InputError):
            separable_features.select([3])

    def test_class_statistics(self, separable_features):
        stats = separable_features.class_statistics()
        assert stats[0]["n"] == 30 and stats[1]["n"] == 30
        assert stats[1]["mean"][0] > stats[0]["mean"][0] + 2.0

    def test_concatenate(self, separable_features):
        both = FeatureMatrix.concatenate([separable_features, separable_features])
        assert both.n_rows == 60 * 2
        assert both.numbers == (1, 2)

    def test_row_mismatch(self):
        with pytest.raises(InputError):
            FeatureMatrix(np.zeros((3, 2)), [0, 1], ["a", "b", "c"], numbers=(1, 2))


class TestSelection:
    def test_ttest_keeps_discriminative_column(self, separable_features):
        pvalues = feature_pvalues(separable_features)
        assert pvalues[1] < 1e-10
        assert 1 in select_features(separable_features, alpha=0.05)

    def test_fixed_and_all(self, separable_features):
        assert select_features(separable_features, mode="selected") == FIXED_FEATURE_SET
        assert FIXED_FEATURE_SET == (1, 2, 5, 6, 7, 9, 10, 11)
        assert select_features(separable_features, mode="all") == (1, 2)

    def test_constant_column_skipped(self, mock_logger):
        values = np.column_stack([np.arange(8.0), np.ones(8)])
        X = FeatureMatrix(values, [0, 0, 0, 0, 1, 1, 1, 1], ["a"] * 8, numbers=(1, 2))
        pvalues = feature_pvalues(X, mock_logger)
        assert pvalues[2] is None
        assert mock_logger.warning.called

    def test_needs_two_rows_per_class(self):
        X = FeatureMatrix(np.zeros((3, 1)), [0, 0, 1], ["a"] * 3, numbers=(1,))
        with pytest.raises(InputError):
            feature_pvalues(X)

    def test_unknown_mode(self, separable_features):
        with pytest.raises(ValueError):
            select_features(separable_features, mode="best")

    def test_false_positive_rate_near_alpha(self):
        generator = np.random.default_rng(11)
        n_columns = 400
        values = generator.normal(size=(40, n_columns))
        labels = [0] * 20 + [1] * 20
        X = FeatureMatrix(values, labels, ["r"] * 40, numbers=tuple(range(1, n_columns + 1)))
        kept = select_features(X, alpha=0.05, mode="ttest")
        assert 0.02 <= len(kept) / n_columns <= 0.09


# ============================================================
# Classification metrics, CV and ROC
# ============================================================

class TestClassificationMetrics:
    def test_docstring_example(self):
        m = classification_metrics([1, 1, 0, 0], [1, 0, 0, 1])
        assert (m.acc, m.tpr, m.fpr) == (0.5, 0.5, 0.5)
        assert (m.tp, m.tn, m.fp, m.fn) == (1, 1, 1, 1)

    def test_single_class_fold(self):
        m = classification_metrics([0, 0, 0], [0, 1, 0])
        assert m.tpr is None
        assert m.fpr == pytest.approx(1 / 3)


class TestCrossValidate:
    def test_separable_data(self, separable_features):
        result = cross_validate(separable_features.values, separable_features.labels, k=5, kind="svm-rbf")
        assert len(result.folds) == 5
        assert result.mean.acc >= 0.95
        assert result.scores.shape == (60,)
        assert np.all(result.fold_of >= 0)

    def test_seeded_folds(self, separable_features):
        a = cross_validate(separable_features.values, separable_features.labels, k=5, kind="lda", seed=3)
        b = cross_validate(separable_features.values, separable_features.labels, k=5, kind="lda", seed=3)
        np.testing.assert_array_equal(a.fold_of, b.fold_of)
        np.testing.assert_allclose(a.scores, b.scores)

    def test_record_level_folds(self, separable_features):
        result = cross_validate(
            separable_features.values,
            separable_features.labels,
            k=3,
            kind="knn-fine",
            groups=separable_features.groups,
        )
        for group in set(separable_features.groups.tolist()):
            folds = set(result.fold_of[separable_features.groups == group].tolist())
            assert len(folds) == 1

    def test_too_few_records(self, separable_features):
        with pytest.raises(InputError):
            cross_validate(
                separable_features.values,
                separable_features.labels,
                k=7,
                groups=separable_features.groups,
            )

    def test_too_few_rows(self, separable_features):
        with pytest.raises(InputError):
            cross_validate(separable_features.values, separable_features.labels, k=31)

    def test_summary_sd(self, separable_features):
        result = cross_validate(separable_features.values, separable_features.labels, k=5, kind="lda")
        summary = result.summary()
        assert summary["acc"].sd >= 0.0
        assert summary["acc"].mean == pytest.approx(np.mean([f.acc for f in result.folds]))

    @pytest.mark.parametrize("kind", ["lda", "svm-rbf"])
    def test_permuted_labels_near_chance(self, kind):
        generator = np.random.default_rng(21)
        X = generator.normal(size=(200, 4))
        y = generator.permutation(np.repeat([0, 1], 100))
        result = cross_validate(X, y, k=10, kind=kind, seed=0)
        assert 0.35 <= result.mean.acc <= 0.65


class TestRocCurve:
    def test_docstring_example(self):
        assert roc_curve([0.1, 0.4, 0.35, 0.8], [0, 0, 1, 1]).auc == pytest.approx(0.75)

    def test_perfect_and_reversed(self):
        assert roc_curve([0.1, 0.2, 0.8, 0.9], [0, 0, 1, 1]).auc == 1.0
        assert roc_curve([0.9, 0.8, 0.2, 0.1], [0, 0, 1, 1]).auc == 0.0

    def test_end_points(self):
        points = roc_curve([0.1, 0.4, 0.35, 0.8], [0, 0, 1, 1]).points()
        assert points[0] == (0.0, 0.0)
        assert points[-1] == (1.0, 1.0)

    def test_single_class(self):
        with pytest.raises(InputError):
            roc_curve([0.1, 0.2], [1, 1])

    def test_random_scores_near_half(self):
        generator = np.random.default_rng(8)
        labels = np.repeat([0, 1], 500)
        assert roc_curve(generator.normal(size=1000), labels).auc == pytest.approx(0.5, abs=0.06)

    def test_monotone_transform_keeps_auc(self, rng):
        scores = rng.normal(size=200)
        labels = rng.permutation(np.repeat([0, 1], 100))
        base = roc_curve(scores, labels).auc
        assert roc_curve(np.exp(scores), labels).auc == pytest.approx(base)
        assert roc_curve(3.0 * scores - 1.0, labels).auc == pytest.approx(base)


# ============================================================
# Record-set pipeline
# ============================================================

class TestRunClassification:
    def test_all_features(self, separable_features):
        config = DelineatorConfig({"k_folds": 5})
        run = run_classification(separable_features, ["svm-rbf", "lda"], "all", config)
        assert run.selected == (1, 2)
        assert set(run.results) == {"svm-rbf", "lda"}
        assert run.roc["lda"].auc > 0.95

    def test_record_cv_unit(self, separable_features):
        config = DelineatorConfig({"k_folds": 3, "cv_unit": "record"})
        run = run_classification(separable_features, ["knn-fine"], "ttest", config)
        assert 1 in run.selected
        assert len(run.results["knn-fine"].folds) == 3

    def test_fixed_set_needs_all_features(self, separable_features):
        with pytest.raises(InputError):
            run_classification(separable_features, ["lda"], "selected", DelineatorConfig({"k_folds": 5}))

    def test_single_class(self, separable_features):
        only_normal = FeatureMatrix(
            separable_features.values[:30], separable_features.labels[:30], separable_features.groups[:30], (1, 2)
        )
        with pytest.raises(InputError):
            run_classification(only_normal, ["lda"], "all")


class TestBuildFeatureDataset:
    def test_pooled_rows(self, clean_record, mock_logger):
        flat = SampledSignal(np.zeros(len(clean_record.ppg)), 1000.0, "ppg")
        records = [
            LabeledRecord("clean", clean_record.scg, clean_record.ppg, 0),
            LabeledRecord("flat", clean_record.scg, flat, 1),
        ]
        X = build_feature_dataset(records, DelineatorConfig(), mock_logger)
        assert X.n_rows >= 10
        assert set(X.groups.tolist()) == {"clean"}
        assert set(X.labels.tolist()) == {0}
        assert X.values.min() >= 0.0 and X.values.max() <= 1.0
        assert any("flat" in str(call) for call in mock_logger.warning.call_args_list)


@pytest.fixture(scope="module")
def synthetic_features(quiet_logger):
    """Pooled features of eight normal and eight held 30 s records."""
    records = generate_dataset(SynthConfig(duration_s=30.0, seed=11), n_records=8)
    labeled = [LabeledRecord(r.name, r.scg, r.ppg, r.label) for r in records]
    return build_feature_dataset(labeled, DelineatorConfig(), quiet_logger)


class TestSyntheticClassification:
    def test_both_classes_present(self, synthetic_features):
        counts = np.bincount(synthetic_features.labels, minlength=2)
        assert np.all(counts >= 100)
        assert len(set(synthetic_features.groups.tolist())) == 16

    def test_rbf_beats_linear(self, synthetic_features):
        run = run_classification(
            synthetic_features, ["svm-rbf", "svm-linear"], "selected", DelineatorConfig()
        )
        rbf = run.results["svm-rbf"].mean.acc
        linear = run.results["svm-linear"].mean.acc
        assert rbf >= 0.95
        assert run.roc["svm-rbf"].auc >= 0.99
        assert rbf > linear

    def test_rbf_beats_linear_on_unseen_records(self, synthetic_features):
        config = DelineatorConfig({"k_folds": 8, "cv_unit": "record"})
        run = run_classification(synthetic_features, ["svm-rbf", "svm-linear"], "selected", config)
        assert run.results["svm-rbf"].mean.acc > run.results["svm-linear"].mean.acc
