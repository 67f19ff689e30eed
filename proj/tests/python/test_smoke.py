"""Smoke tests for the compiled python module."""

import math

import pytest

import motkit


def test_iou():
    a = motkit.Box(0, 0, 10, 10)
    assert motkit.iou(a, a) == pytest.approx(1.0)
    assert motkit.iou(a, motkit.Box(20, 20, 30, 30)) == 0.0
    assert motkit.iou(a, motkit.Box(5, 0, 15, 10)) == pytest.approx(1.0 / 3.0)


def test_box_observation_roundtrip():
    box = motkit.Box(3.5, 7.25, 42.0, 99.0)
    obs = motkit.box_to_observation(box)
    back = motkit.observation_to_box(obs)
    for attr in ("x1", "y1", "x2", "y2"):
        assert getattr(back, attr) == pytest.approx(getattr(box, attr), abs=1e-9)
    with pytest.raises(ValueError):
        motkit.box_to_observation(motkit.Box(0, 0, 0, 10))


def test_filter_converges():
    params = motkit.FilterParams()
    u = 100.0
    fs = motkit.init_filter(motkit.Observation(u, 50.0, 800.0, 0.5), params)
    for _ in range(10):
        fs = motkit.predict(fs, params)
        u += 2.0
        fs = motkit.update(fs, motkit.Observation(u, 50.0, 800.0, 0.5), params)
    fs = motkit.predict(fs, params)
    u += 2.0
    assert abs(fs.state.u - u) < 0.5
    assert len(fs.cov) == 7 and len(fs.cov[0]) == 7


def test_solve_assignment():
    pairs = motkit.solve_assignment([[0.9, 0.1], [0.8, 0.2]])
    assert pairs == [(0, 0), (1, 1)]
    assert motkit.solve_assignment([]) == []


def test_associate_gating():
    det = [motkit.Box(0, 0, 10, 10)]
    far = [motkit.Box(100, 100, 110, 110)]
    fa = motkit.associate(det, far, 0.3)
    assert len(fa.matches) == 0
    assert list(fa.unmatched_detections) == [0]
    assert list(fa.unmatched_tracks) == [0]


def test_tracker_lifecycle():
    cfg = motkit.TrackerConfig()
    cfg.min_hits = 1
    cfg.max_age = 1
    tracker = motkit.Tracker(cfg)

    box = motkit.Box(0, 0, 20, 40)
    out = tracker.step([box])
    assert len(out) == 1 and out[0].id == 1

    assert tracker.step([]) == []
    assert tracker.step([]) == []
    assert tracker.track_count == 0

    out = tracker.step([box])
    assert out[0].id == 2  # reappearance gets a fresh identity


def test_pipeline_clean_scene():
    cfg = motkit.ScenarioConfig()
    cfg.num_objects = 8
    cfg.num_frames = 50
    cfg.seed = 3
    scene = motkit.generate(cfg)

    tcfg = motkit.TrackerConfig()
    tcfg.min_hits = 1
    outputs = motkit.run_sequence(scene.detections, tcfg)
    report = motkit.evaluate(scene.gt, outputs)
    assert report.mota == 1.0
    assert report.false_positives == 0
    assert report.false_negatives == 0
    assert report.id_switches == 0
    assert report.mostly_tracked == 8


def test_occlusion_scenario_counts():
    scene = motkit.occlusion_scenario()
    per_frame = {}
    for det in scene.detections:
        per_frame[det.frame] = per_frame.get(det.frame, 0) + 1
    assert sorted(per_frame) == list(range(1, 41))
    assert sum(1 for f, n in per_frame.items() if n == 1) == 5


def test_io_roundtrip(tmp_path):
    outputs = [
        motkit.TrackOutput(1, 1, motkit.Box(0, 0, 10, 20)),
        motkit.TrackOutput(2, 1, motkit.Box(1, 1, 11, 21)),
    ]
    path = tmp_path / "res.txt"
    motkit.write_results(outputs, path)
    text = path.read_text()
    assert text.splitlines()[0] == "1,1,0.00,0.00,10.00,20.00,1,-1,-1,-1"

    dets = motkit.load_detections(path)
    assert len(dets) == 2
    assert dets[0].box.x2 == pytest.approx(10.0)


def test_evaluate_examples():
    unit = motkit.Box(0, 0, 10, 10)
    gt = [motkit.GtEntry(f, 1, unit) for f in range(1, 11)]
    hyp = [motkit.TrackOutput(f, 1, unit) for f in range(1, 6)]
    rep = motkit.evaluate(gt, hyp)
    assert rep.mota == pytest.approx(0.5)
    assert rep.false_negatives == 5

    handover = [motkit.TrackOutput(f, 1 if f <= 5 else 2, unit) for f in range(1, 11)]
    rep = motkit.evaluate(gt, handover)
    assert rep.id_switches == 1
    assert rep.mota == pytest.approx(0.9)

    agg = motkit.aggregate([rep, rep])
    assert agg.mota == pytest.approx(0.9)
    assert agg.num_gt == 20


def test_confidence_filter():
    box = motkit.Box(0, 0, 5, 5)
    dets = [motkit.Detection(1, box, c) for c in (0.3, 0.5, 0.9)]
    kept = motkit.filter_confidence(dets, 0.5)
    assert [d.conf for d in kept] == [0.9]  # strictly greater than the threshold
