"""
Tests for the delineation engine: PPG apices, diastole and systole
delineation, beat assembly, the windowed pipeline and its events.
"""

import numpy as np
import pytest

from scgkit.analysis import MatchCounts, detection_metrics, evaluate_beats, match_detections
from scgkit.core.config import DelineatorConfig
from scgkit.core.errors import DegenerateInputError, InputError, ParameterError
from scgkit.core.types import FIDUCIALS, BeatAnnotation, SampledSignal
from scgkit.dsp.filters import highpass_detrend
from scgkit.engine import (
    DelineationContext,
    DelineationPipeline,
    Delineator,
    DiastoleTriple,
    PipelineStage,
    SystoleTriple,
    check_synchronized,
    delineate,
    delineate_diastole,
    detect_ao,
    detect_ppg_peaks,
    locate_pac,
    mask_diastole,
    mask_intervals,
    merge_windows,
    pair_beats,
    ppg_ensemble,
    window_bounds,
)
from scgkit.events import DelineationStage, EventStatus
from scgkit.synth import SynthConfig, generate

SYSTOLIC = ("im", "ao", "ic")


# ============================================================
# Windows and merging
# ============================================================

class TestWindowBounds:
    def test_docstring_example(self):
        assert window_bounds(25000, 10000, 1000) == [(0, 10000), (9000, 19000), (15000, 25000)]

    def test_short_record_is_one_window(self):
        assert window_bounds(8000, 10000, 1000) == [(0, 8000)]
        assert window_bounds(10000, 10000, 1000) == [(0, 10000)]

    def test_windows_cover_record(self):
        bounds = window_bounds(60001, 10000, 1000)
        assert bounds[0][0] == 0
        assert bounds[-1][1] == 60001
        for (_, stop), (start, _) in zip(bounds, bounds[1:]):
            assert start < stop
        assert all(stop - start == 10000 for start, stop in bounds)


class TestPairBeats:
    def test_pairs_in_order(self):
        systoles = [SystoleTriple(30, 60, 90), SystoleTriple(1030, 1060, 1090)]
        diastoles = [DiastoleTriple(1360, 1400, 1460), DiastoleTriple(360, 400, 460)]
        beats = pair_beats(systoles, diastoles, 1000.0)
        assert len(beats) == 2
        assert all(b.is_complete for b in beats)
        assert beats[0].ao == 60 and beats[0].ac == 360
        assert beats[0].lvet_ms == 300.0
        assert beats[1].ao == 1060 and beats[1].mo == 1460

    def test_diastole_without_ao_kept(self):
        beats = pair_beats([], [DiastoleTriple(360, 400, 460)], 1000.0)
        assert len(beats) == 1
        assert beats[0].ao is None
        assert beats[0].ivrt_ms == 100.0

    def test_ao_without_ac_dropped(self):
        systoles = [SystoleTriple(30, 60, 90), SystoleTriple(1030, 1060, 1090)]
        beats = pair_beats(systoles, [DiastoleTriple(1360, 1400, 1460)], 1000.0)
        assert [b.ao for b in beats] == [1060]

    def test_out_of_order_pair_keeps_diastole_only(self):
        beats = pair_beats([SystoleTriple(30, 60, 380)], [DiastoleTriple(360, 400, 460)], 1000.0)
        assert len(beats) == 1
        assert beats[0].ao is None
        assert beats[0].pac == 400


class TestMergeWindows:
    def test_complete_beat_wins(self, beat_factory):
        partial = BeatAnnotation.build(1000.0, ac=1360, pac=1400, mo=1460)
        merged = merge_windows(
            [[beat_factory(), partial], [beat_factory(offset=1000), beat_factory(offset=2000)]],
            tolerance=200,
        )
        assert [b.ao for b in merged] == [60, 1060, 2060]
        assert all(b.is_complete for b in merged)

    def test_earlier_window_wins_on_tie(self, beat_factory):
        merged = merge_windows(
            [[beat_factory(offset=1000)], [beat_factory(offset=1005)]], tolerance=200
        )
        assert [b.ao for b in merged] == [1060]

    def test_distinct_beats_kept(self, beat_factory):
        merged = merge_windows([[beat_factory()], [beat_factory(offset=700)]], tolerance=200)
        assert len(merged) == 2


# ============================================================
# Diastole helpers
# ============================================================

class TestDiastoleHelpers:
    def test_mask_docstring_example(self):
        scg = SampledSignal(np.ones(1000), 1000.0, "scg")
        masked = mask_diastole(scg, [DiastoleTriple(360, 400, 460)], guard_ms=20)
        assert np.all(masked.samples[340:481] == 0)
        assert masked.samples[339] == 1.0
        assert masked.samples[481] == 1.0

    def test_mask_intervals_merge_and_clip(self):
        intervals = mask_intervals([(100, 150, 200), (230, 260, 300), (980, 990, 995)], 20, 1000)
        assert intervals == [(80, 320), (960, 999)]

    def test_negative_guard(self):
        scg = SampledSignal(np.ones(100), 1000.0)
        with pytest.raises(ParameterError):
            mask_diastole(scg, [], guard_ms=-1)

    def test_locate_pac(self):
        x = np.zeros(2000)
        x[410] = 1.0
        x[1230] = 0.5
        scg = SampledSignal(x, 1000.0)
        assert locate_pac(scg, [400, 1200]).tolist() == [410, 1230]

    def test_locate_pac_drops_edge_and_collapses(self):
        x = np.zeros(2000)
        x[410] = 1.0
        scg = SampledSignal(x, 1000.0)
        assert locate_pac(scg, [50, 400, 420, 1950]).tolist() == [410]

    def test_check_synchronized(self):
        a = SampledSignal(np.zeros(100), 1000.0)
        with pytest.raises(InputError):
            check_synchronized(a, SampledSignal(np.zeros(100), 500.0))
        with pytest.raises(InputError):
            check_synchronized(a, SampledSignal(np.zeros(99), 1000.0))


# ============================================================
# AO detection
# ============================================================

class TestDetectAo:
    AO = (500, 1500, 2500)

    def beats(self, mc_amplitude):
        t = np.arange(3000)
        x = np.zeros(3000)
        for ao in self.AO:
            # 25 Hz AO burst, slow MC wave 120 ms earlier
            x += np.cos(2 * np.pi * 25 * (t - ao) / 1000.0) * np.exp(-0.5 * ((t - ao) / 10.0) ** 2)
            x += mc_amplitude * np.exp(-0.5 * ((t - ao + 120) / 25.0) ** 2)
        return SampledSignal(x, 1000.0, "scg")

    def test_band_dominant_ao_beats_taller_mc(self):
        scg = self.beats(mc_amplitude=2.0)
        mc = np.array(self.AO) - 120
        assert np.max(scg.samples[mc]) > np.max(scg.samples[list(self.AO)])
        found = detect_ao(scg)
        assert len(found) == 3
        assert np.all(np.abs(found.indices - np.array(self.AO)) <= 10)

    def test_candidates_in_masked_interval_dropped(self):
        scg = self.beats(mc_amplitude=0.0)
        found = detect_ao(scg, intervals=[(1400, 1600)])
        assert 1500 not in found.indices.tolist()
        assert all(not 1400 <= i <= 1600 for i in found.indices)


# ============================================================
# PPG apices
# ============================================================

class TestPpgPeaks:
    def test_matches_ground_truth(self, clean_record):
        peaks = detect_ppg_peaks(clean_record.ppg)
        counts = match_detections(peaks, clean_record.truth.ppg_peaks, tol_ms=20, fs=1000.0)
        assert counts.tp >= 0.9 * len(clean_record.truth.ppg_peaks)
        assert counts.fp <= 1

    def test_short_record(self):
        with pytest.raises(InputError):
            detect_ppg_peaks(SampledSignal(np.random.default_rng(0).normal(size=2000), 1000.0))

    def test_flat_ppg(self):
        with pytest.raises(DegenerateInputError):
            detect_ppg_peaks(SampledSignal(np.zeros(5000), 1000.0, "ppg"))

    @pytest.mark.parametrize("hr_bpm", [60.0, 75.0, 90.0])
    def test_no_detections_between_pulses(self, hr_bpm):
        record = generate(SynthConfig(duration_s=30.0, hr_bpm=hr_bpm, seed=4))
        peaks = detect_ppg_peaks(record.ppg)
        counts = match_detections(peaks, record.truth.ppg_peaks, tol_ms=50, fs=1000.0)
        assert counts.fp <= 1, hr_bpm
        assert counts.tp >= 0.95 * len(record.truth.ppg_peaks), hr_bpm

    def test_ensemble_ignores_troughs(self):
        record = generate(
            SynthConfig(duration_s=10.0, hr_bpm=90.0, snr_db=np.inf, ppg_snr_db=np.inf, drift_amp=0.0)
        )
        config = DelineatorConfig()
        detrended = highpass_detrend(record.ppg, config.detrend_cutoff_hz, config.filter_order)
        added = ppg_ensemble(detrended, config).samples - detrended.samples
        apices = record.truth.ppg_peaks
        for left, right in zip(apices[1:-2], apices[2:-1]):
            trough = left + int(np.argmin(detrended.samples[left:right]))
            assert added[trough] == pytest.approx(detrended.samples.min())
            assert added[left] > added[trough]

    def test_amplitude_invariant(self, clean_record):
        reference = detect_ppg_peaks(clean_record.ppg)
        scaled = clean_record.ppg.with_samples(4.0 * clean_record.ppg.samples)
        assert detect_ppg_peaks(scaled).tolist() == reference.tolist()


# ============================================================
# End-to-end delineation
# ============================================================

class TestDelineator:
    def test_clean_record_performance(self, clean_record, clean_beats):
        reports = evaluate_beats(clean_beats, clean_record.truth.beats, tol_ms=50, fs=1000.0)
        for name in FIDUCIALS:
            assert reports[name].se >= 0.95, name
            assert reports[name].pp >= 0.95, name

    def test_beats_ordered_and_unique(self, clean_beats):
        assert clean_beats
        assert all(beat.is_ordered() for beat in clean_beats)
        for name in FIDUCIALS:
            values = [getattr(b, name) for b in clean_beats if getattr(b, name) is not None]
            assert values == sorted(values)
            assert len(values) == len(set(values))

    def test_intervals_match_points(self, clean_beats):
        for beat in clean_beats:
            if beat.ao is not None and beat.ac is not None:
                assert beat.lvet_ms == pytest.approx(beat.ac - beat.ao)

    def test_window_length_barely_matters(self, clean_record, clean_beats, quiet_logger):
        config = DelineatorConfig({"window_s": 7.0})
        beats = Delineator(config=config, logger=quiet_logger).delineate(
            clean_record.scg, clean_record.ppg
        )
        a = [b.ao for b in clean_beats if b.ao is not None]
        b = [b.ao for b in beats if b.ao is not None]
        counts = match_detections(a, b, tol_ms=5, fs=1000.0)
        assert counts.tp >= 0.9 * max(len(a), len(b))

    def test_deterministic(self, clean_record, clean_beats, quiet_logger):
        again = Delineator(logger=quiet_logger).delineate(clean_record.scg, clean_record.ppg)
        assert again == clean_beats

    def test_anti_alias_option(self, clean_record, quiet_logger):
        config = DelineatorConfig({"anti_alias": True})
        beats = Delineator(config=config, logger=quiet_logger).delineate(
            clean_record.scg, clean_record.ppg
        )
        assert beats

    def test_unsynchronized_channels(self, clean_record, quiet_logger):
        with pytest.raises(InputError):
            Delineator(logger=quiet_logger).delineate(
                clean_record.scg, clean_record.ppg.segment(0, 15000)
            )

    def test_both_config_sources_rejected(self, tmp_path):
        with pytest.raises(ValueError):
            Delineator(config_path=str(tmp_path / "x.yaml"), config=DelineatorConfig())

    def test_functional_entry_point(self, clean_record, quiet_logger):
        beats = delineate(clean_record.scg, clean_record.ppg, window_s=10, logger=quiet_logger)
        assert len(beats) > 10


class TestDelineationInvariants:
    def test_systole_outside_masked_diastole(self, noisy_record, quiet_logger):
        # one window, so the record-wide mask is the one systole was searched under
        config = DelineatorConfig({"window_s": 25.0})
        beats = Delineator(config=config, logger=quiet_logger).delineate(
            noisy_record.scg, noisy_record.ppg
        )
        diastoles = [
            (b.ac, b.pac, b.mo) for b in beats if None not in (b.ac, b.pac, b.mo)
        ]
        guard = noisy_record.scg.ms_to_samples(config.mask_guard_ms)
        intervals = mask_intervals(diastoles, guard, len(noisy_record.scg))
        assert any(b.ao is not None for b in beats)
        for beat in beats:
            for name in SYSTOLIC:
                point = getattr(beat, name)
                if point is None:
                    continue
                assert not any(start <= point <= stop for start, stop in intervals), (name, point)

    def test_amplitude_invariant(self, clean_record, clean_beats, quiet_logger):
        scg = clean_record.scg.with_samples(4.0 * clean_record.scg.samples)
        ppg = clean_record.ppg.with_samples(0.25 * clean_record.ppg.samples)
        assert Delineator(logger=quiet_logger).delineate(scg, ppg) == clean_beats

    def test_dropped_pulse_loses_only_its_diastole(self):
        record = generate(
            SynthConfig(
                duration_s=20.0,
                snr_db=np.inf,
                ppg_snr_db=np.inf,
                drift_amp=0.0,
                dropout_beats=(6,),
                seed=1,
            )
        )
        pacs = [triple.pac for triple in delineate_diastole(record.scg, record.ppg)]
        truth = record.truth.fiducial("pac")
        lost = truth[6]
        assert all(abs(p - lost) > 50 for p in pacs)
        counts = match_detections(pacs, truth, tol_ms=50, fs=1000.0)
        assert counts.fp == 0
        assert counts.tp >= len(truth) - 3


# ============================================================
# Synthetic acceptance set
# ============================================================

ACCEPTANCE_RATES_BPM = np.linspace(60.0, 90.0, 10)


@pytest.fixture(scope="module")
def acceptance_runs(quiet_logger):
    """Ten 60 s records at 20 dB SNR, 60 to 90 bpm, with their delineations."""
    delineator = Delineator(logger=quiet_logger)
    runs = []
    for i, hr_bpm in enumerate(ACCEPTANCE_RATES_BPM):
        cfg = SynthConfig(duration_s=60.0, snr_db=20.0, hr_bpm=float(hr_bpm), seed=100 + i)
        record = generate(cfg, name=f"acceptance_{i:02d}")
        runs.append((record, delineator.delineate(record.scg, record.ppg)))
    return runs


def matched_beats(beats, reference, tolerance):
    """Detected beats paired with the reference beat nearest in AO, within ``tolerance`` samples."""
    reference = [b for b in reference if b.ao is not None]
    ref_ao = np.array([b.ao for b in reference])
    pairs = []
    for beat in beats:
        if beat.ao is None:
            continue
        nearest = int(np.argmin(np.abs(ref_ao - beat.ao)))
        if abs(int(ref_ao[nearest]) - beat.ao) <= tolerance:
            pairs.append((beat, reference[nearest]))
    return pairs


class TestAcceptance:
    def test_pooled_detection(self, acceptance_runs):
        pooled = {name: MatchCounts(0, 0, 0) for name in FIDUCIALS}
        for record, beats in acceptance_runs:
            reports = evaluate_beats(beats, record.truth.beats, tol_ms=50, fs=1000.0)
            for name, report in reports.items():
                tp, fp, fn = pooled[name]
                pooled[name] = MatchCounts(tp + report.tp, fp + report.fp, fn + report.fn)

        for name, counts in pooled.items():
            report = detection_metrics(*counts, fiducial=name)
            floor = 0.95 if name in ("ao", "pac") else 0.90
            assert report.se >= floor, report
            assert report.pp >= floor, report

    def test_interval_errors(self, acceptance_runs):
        lvet_errors, ivrt_errors = [], []
        for record, beats in acceptance_runs:
            for beat, truth in matched_beats(beats, record.truth.beats, 50):
                if beat.lvet_ms is not None:
                    lvet_errors.append(abs(beat.lvet_ms - truth.lvet_ms))
                if beat.ivrt_ms is not None:
                    ivrt_errors.append(abs(beat.ivrt_ms - truth.ivrt_ms))
        assert lvet_errors and ivrt_errors
        assert np.median(lvet_errors) <= 20.0
        assert np.median(ivrt_errors) <= 20.0

    def test_complete_beats_ordered(self, acceptance_runs):
        complete = [b for _, beats in acceptance_runs for b in beats if b.is_complete]
        assert len(complete) > 400
        assert all(b.is_ordered() for b in complete)


class TestPipelineEvents:
    def test_events_stream(self, clean_record, quiet_logger, event_collector):
        Delineator(logger=quiet_logger, event_callback=event_collector.collect).delineate(
            clean_record.scg, clean_record.ppg
        )
        stages = {e.stage for e in event_collector.events}
        assert DelineationStage.PPG_PEAKS.value in stages
        assert DelineationStage.SYSTOLE.value in stages
        completed = event_collector.by_stage(DelineationStage.COMPLETED)
        assert len(completed) == 3
        assert all(e.status == EventStatus.PASSED.value for e in completed)

    def test_events_carry_window(self, clean_record, quiet_logger, event_collector):
        beats = Delineator(logger=quiet_logger, event_callback=event_collector.collect).delineate(
            clean_record.scg, clean_record.ppg
        )
        assert {e.window for e in event_collector.events} == {0, 1, 2}
        per_window = event_collector.beats_per_window()
        assert sorted(per_window) == [0, 1, 2]
        # overlapping windows report shared beats twice
        assert sum(per_window.values()) >= len(beats)
        for event in event_collector.by_stage(DelineationStage.COMPLETED):
            assert 0 <= event.details["complete"] <= event.details["beats"]

    def test_stage_can_stop_window(self, clean_record, mock_logger):
        class StopStage(PipelineStage):
            def __init__(self):
                super().__init__(name="Stop", stage_type=DelineationStage.PPG_PEAKS)

            def execute(self, context):
                return False, "nothing here"

        pipeline = DelineationPipeline([StopStage()], logger=mock_logger)
        context = DelineationContext(scg=clean_record.scg, ppg=clean_record.ppg)
        assert pipeline.run(context) == (False, "nothing here")
        assert not context.completed
        assert context.reason == "nothing here"

    def test_flat_ppg_window_yields_no_beats(self, clean_record, mock_logger):
        flat = SampledSignal(np.zeros(len(clean_record.ppg)), 1000.0, "ppg")
        beats = Delineator(logger=mock_logger).delineate(clean_record.scg, flat)
        assert beats == []
        assert mock_logger.warning.called
