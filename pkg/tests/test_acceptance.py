"""Acceptance-scale runs with wall-clock budgets. Select with `pytest -m slow`."""
import time

import pytest

from classify import EvalProtocol, SignatureConfig, compute_signatures, evaluate
from classify.signature import channel_signature
from config import settings
from dataset import synthetic_samples
from dynamics import OdeSpec, integrate
from topology.diagrams import persistent_betti
from topology.embedding import TimeSeries

pytestmark = pytest.mark.slow

PROTOCOL = EvalProtocol(n_splits=20, test_per_class=3, seed=0)

# Leading stretch of the pinned 5000-sample trajectory that the 150 points cover:
# about four Lorenz lobe turns and three Rossler orbits at dt = 0.01.
OBSERVED_SAMPLES = {"lorenz": 300, "rossler": 1800}

ATTRACTOR_BUDGET = 30.0
CORPUS_BUDGET = 300.0


def observed_x(system: str) -> TimeSeries:
    x = integrate(OdeSpec(system=system))[0]
    return TimeSeries(x.samples[: OBSERVED_SAMPLES[system]], "x")


def attractor_betti(system: str):
    sig = channel_signature(observed_x(system), SignatureConfig())
    threshold = settings.threshold_fraction * sig.eps_max
    return persistent_betti(sig.h0, 0, threshold), persistent_betti(sig.h1, 1, threshold)


def test_attractor_topology():
    started = time.perf_counter()
    assert attractor_betti("lorenz") == (1, 1)
    assert attractor_betti("rossler") == (1, 2)
    assert time.perf_counter() - started < ATTRACTOR_BUDGET


def test_attractor_delays_follow_oscillation():
    """The autocorrelation delay sits near a quarter of the dominant period."""
    lorenz = channel_signature(observed_x("lorenz"), SignatureConfig())
    rossler = channel_signature(observed_x("rossler"), SignatureConfig())
    assert 10 <= lorenz.tau <= 25
    assert 130 <= rossler.tau <= 160
    assert lorenz.n_points == rossler.n_points == 150


@pytest.fixture(scope="module")
def corpus():
    return synthetic_samples(instances_per_class=20, n_samples=400, channels=3, seed=0)


@pytest.fixture(scope="module")
def linked_run(corpus):
    started = time.perf_counter()
    signatures = compute_signatures(corpus, SignatureConfig())
    report = evaluate(signatures, PROTOCOL)
    return signatures, report, time.perf_counter() - started


def test_corpus_accuracy(linked_run):
    _, report, _ = linked_run
    assert report.mean_accuracy >= 0.95


def test_corpus_within_budget(linked_run):
    *_, elapsed = linked_run
    assert elapsed < CORPUS_BUDGET


def test_temporal_links_not_worse(corpus, linked_run):
    _, report, _ = linked_run
    plain = evaluate(compute_signatures(corpus, SignatureConfig(temporal_links=False)), PROTOCOL)
    assert report.mean_accuracy >= plain.mean_accuracy - 0.02


def test_corpus_report_reproducible(corpus, linked_run):
    signatures, report, _ = linked_run
    assert evaluate(signatures, PROTOCOL).digest() == report.digest()
    # One recording per class, recomputed from scratch.
    picks = list(range(0, len(corpus), 20))
    again = compute_signatures([corpus[i] for i in picks], SignatureConfig())
    for i, sig in zip(picks, again):
        assert [d.as_tuples() for d in sig.diagrams()] == [d.as_tuples() for d in signatures[i].diagrams()]
