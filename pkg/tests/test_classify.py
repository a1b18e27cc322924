"""Tests for signatures, sample distances, k-NN and split evaluation."""
import math
import pickle

import numpy as np
import pytest
from conftest import two_class_samples

from classify import (
    ChannelSignature,
    EvalProtocol,
    SignatureConfig,
    TopologicalSignature,
    compute_signatures,
    evaluate,
    evaluate_distances,
    knn_predict,
    pairwise_distances,
    predict_from_distances,
    sample_distance,
    signature,
)
from classify.signature import channel_signature
from dataset import ActionSample
from topology.diagrams import from_tuples
from topology.embedding import TimeSeries
from utils.errors import (
    ChannelCountMismatch,
    ChannelError,
    EmptyTestSet,
    EmptyTrainSet,
    FingerprintMismatch,
    SeriesTooShort,
)

CFG = SignatureConfig(max_points=30)


def hand_signature(h1_points, label="a", sample_id="s", cfg=CFG, n_channels=1, eps_max=5.0, h0=None):
    channels = [
        ChannelSignature(
            channel=f"c{i}",
            tau=1,
            n_points=10,
            eps_max=eps_max,
            h0=from_tuples(h0 or [], eps_max),
            h1=from_tuples([(1, b, d) for b, d in h1_points], eps_max),
        )
        for i in range(n_channels)
    ]
    return TopologicalSignature(sample_id=sample_id, label=label, fingerprint=cfg.digest(), config=cfg, channels=channels)


def test_constant_channel():
    sig = channel_signature(TimeSeries(np.full(50, 2.0), "c0"), CFG)
    assert sig.tau == 1
    assert sig.eps_max == 0.0
    assert sig.h0.as_tuples() == [(0, 0.0, math.inf)]
    assert len(sig.h1) == 0


def test_zero_persistence_kept_on_request():
    series = TimeSeries(np.full(20, 1.0), "c0")
    assert len(channel_signature(series, CFG, keep_zero_persistence=True).h0) == 18


def test_one_diagram_per_channel_and_dim():
    t = np.arange(80)
    sample = ActionSample((TimeSeries(np.sin(t / 3.0), "a"), TimeSeries(np.cos(t / 5.0), "b")), "x", "s0")
    sig = signature(sample, CFG)
    assert sig.n_channels == 2
    assert len(sig.diagrams()) == 4
    assert [ch.channel for ch in sig.channels] == ["a", "b"]
    assert sig.fingerprint == CFG.digest()


def test_channel_error_names_channel():
    sample = ActionSample((TimeSeries(np.arange(3.0), "short"),), "x", "s0")
    with pytest.raises(ChannelError) as info:
        signature(sample, CFG)
    assert info.value.channel == "short"
    assert isinstance(info.value.cause, SeriesTooShort)


def test_errors_survive_pickling():
    error = pickle.loads(pickle.dumps(ChannelError("c1", SeriesTooShort(3, 4))))
    assert error.channel == "c1"
    assert error.cause.needed == 4
    assert str(error) == "channel 'c1': Series of length 3 is too short, need at least 4 samples"


def test_parallel_signatures_match_serial():
    samples = two_class_samples()
    serial = compute_signatures(samples, CFG)
    parallel = compute_signatures(samples, CFG, workers=2)
    assert [s.sample_id for s in parallel] == [s.sample_id for s in serial]
    for x, y in zip(serial, parallel):
        assert [d.as_tuples() for d in x.diagrams()] == [d.as_tuples() for d in y.diagrams()]


def test_channel_error_crosses_worker_boundary():
    samples = two_class_samples(per_class=1) + [ActionSample((TimeSeries(np.arange(3.0), "short"),), "x", "s0")]
    with pytest.raises(ChannelError) as info:
        compute_signatures(samples, CFG, workers=2)
    assert info.value.channel == "short"


def test_config_fingerprint():
    assert SignatureConfig().digest() == SignatureConfig().digest()
    assert SignatureConfig(m=2).digest() != SignatureConfig().digest()
    assert SignatureConfig(temporal_links=False).digest() != SignatureConfig().digest()


def test_sample_distance_examples():
    a = hand_signature([(0.0, 2.0)])
    empty = hand_signature([])
    assert sample_distance(a, empty) == 2.0
    assert sample_distance(empty, a) == 2.0
    assert sample_distance(a, a) == 0.0


def test_sample_distance_sums_channels():
    a = hand_signature([(0.0, 2.0)], n_channels=3)
    b = hand_signature([(0.0, 1.0)], n_channels=3)
    assert sample_distance(a, b) == 3.0


def test_essential_classes_closed_at_own_scale():
    a = hand_signature([], h0=[(0, 0.0, None)], eps_max=5.0)
    b = hand_signature([], h0=[(0, 0.0, None)], eps_max=3.0)
    assert sample_distance(a, b) == 2.0


def random_signature(rng, sample_id, n_channels=3):
    channels = []
    for i in range(n_channels):
        eps_max = float(rng.uniform(1.0, 6.0))
        deaths = rng.uniform(0.0, eps_max, size=rng.integers(0, 6))
        births = rng.uniform(0.0, eps_max, size=rng.integers(0, 6))
        h1 = [(1, b, float(rng.uniform(b, eps_max))) for b in births.tolist()]
        if rng.random() < 0.3:
            h1.append((1, float(rng.uniform(0.0, eps_max)), None))
        channels.append(ChannelSignature(
            channel=f"c{i}",
            tau=1,
            n_points=10,
            eps_max=eps_max,
            h0=from_tuples([(0, 0.0, d) for d in deaths.tolist()] + [(0, 0.0, None)], eps_max),
            h1=from_tuples(h1, eps_max),
        ))
    return TopologicalSignature(sample_id=sample_id, label="a", fingerprint=CFG.digest(), config=CFG, channels=channels)


def test_sample_distance_is_pseudometric(rng):
    for trial in range(100):
        a, b, c = (random_signature(rng, f"{trial}{name}") for name in "abc")
        ab, ba = sample_distance(a, b), sample_distance(b, a)
        assert ab == ba
        assert sample_distance(a, a) == pytest.approx(0.0, abs=1e-12)
        assert sample_distance(a, c) <= ab + sample_distance(b, c) + 1e-9


def test_incomparable_signatures():
    a = hand_signature([])
    with pytest.raises(FingerprintMismatch):
        sample_distance(a, hand_signature([], cfg=SignatureConfig(m=2)))
    with pytest.raises(ChannelCountMismatch):
        sample_distance(a, hand_signature([], n_channels=2))


def test_pairwise_matrix():
    sigs = [hand_signature([(0.0, d)], sample_id=f"s{i}") for i, d in enumerate([1.0, 2.0, 4.0, 0.5])]
    d = pairwise_distances(sigs)
    np.testing.assert_array_equal(d, d.T)
    np.testing.assert_array_equal(np.diag(d), 0.0)
    assert d[0, 2] == sample_distance(sigs[0], sigs[2]) == 3.0
    np.testing.assert_array_equal(pairwise_distances(sigs, workers=2), d)
    assert pairwise_distances([]).shape == (0, 0)


def test_nearest_neighbor_ties_go_to_lower_index():
    assert predict_from_distances([1.0, 1.0, 2.0], ["b", "a", "a"]) == "b"
    assert predict_from_distances([3.0, 1.0, 1.0], ["b", "a", "c"]) == "a"


def test_single_training_sample():
    assert predict_from_distances([7.0], ["only"]) == "only"
    with pytest.raises(EmptyTrainSet):
        predict_from_distances([], [])


def test_monotone_rescaling_keeps_prediction(rng):
    for _ in range(50):
        d = rng.uniform(0.0, 3.0, size=12)
        labels = [str(c) for c in rng.integers(0, 3, size=12)]
        assert predict_from_distances(d, labels) == predict_from_distances(d ** 2, labels)


def test_majority_vote():
    assert predict_from_distances([0.1, 0.2, 0.3, 0.4], ["a", "b", "b", "a"], k=3) == "b"
    assert predict_from_distances([0.1, 0.2], ["a", "b"], k=2) == "a"
    with pytest.raises(ValueError):
        predict_from_distances([0.1], ["a"], k=0)


def test_knn_predict():
    train = [hand_signature([(0.0, 1.0)], label="small"), hand_signature([(0.0, 4.0)], label="big")]
    assert knn_predict(hand_signature([(0.0, 3.5)]), train) == "big"
    with pytest.raises(EmptyTrainSet):
        knn_predict(train[0], [])


def _block_distances(labels, same, other):
    labels = np.asarray(labels)
    d = np.where(labels[:, None] == labels[None, :], same, other).astype(float)
    np.fill_diagonal(d, 0.0)
    return d


def test_separable_classes():
    labels = ["a"] * 3 + ["b"] * 3
    report = evaluate_distances(_block_distances(labels, 0.1, 5.0), labels, EvalProtocol(n_splits=5, test_per_class=1))
    assert report.mean_accuracy == 1.0
    assert report.std_accuracy == 0.0
    assert report.confusion == [[1.0, 0.0], [0.0, 1.0]]
    assert report.test_counts == [5, 5]


def test_crossed_classes():
    labels = ["a", "a", "b", "b"]
    report = evaluate_distances(_block_distances(labels, 1.0, 0.5), labels, EvalProtocol(n_splits=4, test_per_class=1))
    assert report.mean_accuracy == 0.0
    assert report.std_accuracy == 0.0
    assert report.confusion == [[0.0, 1.0], [1.0, 0.0]]


def test_report_consistency(rng):
    labels = ["a"] * 6 + ["b"] * 5 + ["c"] * 7
    x = rng.normal(size=(len(labels), 2))
    d = np.linalg.norm(x[:, None] - x[None, :], axis=2)
    protocol = EvalProtocol(n_splits=20, test_per_class=2, seed=9)
    report = evaluate_distances(d, labels, protocol)

    assert report.classes == ["a", "b", "c"]
    assert len(report.per_split_accuracy) == 20
    assert report.mean_accuracy == pytest.approx(np.mean(report.per_split_accuracy))
    assert report.std_accuracy == pytest.approx(np.std(report.per_split_accuracy))
    np.testing.assert_allclose(np.sum(report.confusion, axis=1), 1.0)
    correct = sum(n * row[i] for i, (n, row) in enumerate(zip(report.test_counts, report.confusion)))
    assert correct / sum(report.test_counts) == pytest.approx(report.mean_accuracy)
    assert evaluate_distances(d, labels, protocol).digest() == report.digest()


def test_empty_test_set():
    labels = ["a", "a", "b", "b"]
    with pytest.raises(EmptyTestSet):
        evaluate_distances(_block_distances(labels, 1.0, 2.0), labels, EvalProtocol(test_per_class=0))


def test_evaluate_two_classes():
    samples = two_class_samples()
    signatures = compute_signatures(samples, CFG)
    assert [s.sample_id for s in signatures] == [s.sample_id for s in samples]

    report = evaluate(signatures, EvalProtocol(n_splits=5, test_per_class=1, seed=2))
    assert report.mean_accuracy == 1.0
    assert report.fingerprint == CFG.digest()
    assert report.config == CFG
    assert report.std_kind == "population"
