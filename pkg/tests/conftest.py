from pathlib import Path
from typing import List

import numpy as np
import pytest

from dataset import ActionSample, DatasetManifest, ManifestEntry, file_sha256, write_manifest, write_series_csv
from topology.embedding import PointCloud, TimeSeries


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_cloud(rng: np.random.Generator, n: int, dim: int, temporal_order: bool = True) -> PointCloud:
    return PointCloud(rng.uniform(-1.0, 1.0, size=(n, dim)), temporal_order=temporal_order)


def two_class_samples(per_class: int = 4, n: int = 64) -> List[ActionSample]:
    """Constant 'flat' recordings against sinusoidal 'wave' recordings, one channel each."""

    samples = []
    for i in range(per_class):
        flat = TimeSeries(np.full(n, 0.5 * i), "c0")
        samples.append(ActionSample((flat,), "flat", f"flat_{i}"))
    t = np.arange(n)
    for i in range(per_class):
        wave = TimeSeries((1.0 + 0.05 * i) * np.sin(2 * np.pi * t / 16 + 0.3 * i), "c0")
        samples.append(ActionSample((wave,), "wave", f"wave_{i}"))
    return samples


def write_samples(samples: List[ActionSample], out_dir: Path) -> Path:
    entries = []
    for s in samples:
        path = write_series_csv(out_dir / f"{s.sample_id}.csv", s.channels)
        entries.append(ManifestEntry(path=path.name, label=s.label, sample_id=s.sample_id, sha256=file_sha256(path)))
    return write_manifest(DatasetManifest(entries=entries, base_dir=str(out_dir)), out_dir / "manifest.csv")


@pytest.fixture
def two_class_manifest(tmp_path) -> Path:
    return write_samples(two_class_samples(), tmp_path / "corpus")
