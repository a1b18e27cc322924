"""Five-class synthetic corpus standing in for labeled motion recordings.

Classes: lorenz and rossler (three state components of a randomly started
trajectory), sine, noisy_sine and damped_sine (independent random channels).
"""

import logging
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from config import store_settings
from dynamics import OdeSpec, SignalParams, integrate, synth_signal
from topology.embedding import TimeSeries

from .loader import ActionSample
from .manifest import DatasetManifest, ManifestEntry, file_sha256, write_manifest
from .series_io import write_series_csv

logger = logging.getLogger(__name__)

CORPUS_CLASSES = ("damped_sine", "lorenz", "noisy_sine", "rossler", "sine")

# Per-system sampling: about a dozen Lorenz lobe visits / five Rossler turns in 400 samples.
ODE_SAMPLING = {
    "lorenz": {"dt": 0.02, "burn_in": 500},
    "rossler": {"dt": 0.08, "burn_in": 500},
}


def _ode_channels(system: str, rng: np.random.Generator, n_samples: int, channels: int) -> List[TimeSeries]:
    x0 = tuple(float(v) for v in 1.0 + rng.uniform(-0.5, 0.5, size=3))
    sampling = ODE_SAMPLING[system]
    spec = OdeSpec(
        system=system,
        x0=x0,
        dt=sampling["dt"],
        burn_in=sampling["burn_in"],
        n_steps=sampling["burn_in"] + n_samples,
    )
    components = integrate(spec)
    return [TimeSeries(components[i % 3].samples, f"c{i}") for i in range(channels)]


def _signal_channels(kind: str, rng: np.random.Generator, n_samples: int, channels: int) -> List[TimeSeries]:
    out = []
    for i in range(channels):
        amplitude = rng.uniform(0.8, 1.2)
        params = SignalParams(
            amplitude=amplitude,
            period=rng.uniform(20.0, 40.0),
            phase=rng.uniform(0.0, 2.0 * np.pi),
            noise=0.25 * amplitude if kind == "noisy_sine" else 0.0,
            # Envelope shrinks to 5-20% of its start by the last sample.
            decay=-np.log(rng.uniform(0.05, 0.2)) / n_samples if kind == "damped_sine" else 0.0,
        )
        seed = int(rng.integers(0, 2**31 - 1))
        out.append(synth_signal(kind, params, n_samples, seed, f"c{i}"))
    return out


def synthetic_samples(
    instances_per_class: int = 20,
    n_samples: int = 400,
    channels: int = 3,
    seed: int = 0,
) -> List[ActionSample]:
    """Deterministic for a fixed seed; samples are grouped by class in CORPUS_CLASSES order."""

    if instances_per_class < 1 or channels < 1:
        raise ValueError("instances_per_class and channels must be positive")

    rng = np.random.default_rng(seed)
    samples = []
    for label in CORPUS_CLASSES:
        for i in range(instances_per_class):
            if label in ODE_SAMPLING:
                series = _ode_channels(label, rng, n_samples, channels)
            else:
                series = _signal_channels(label, rng, n_samples, channels)
            samples.append(ActionSample(tuple(series), label, f"{label}_{i:03d}"))

    logger.info("Generated %d synthetic samples (%d per class, seed %d)", len(samples), instances_per_class, seed)
    return samples


def write_corpus(
    out_dir: Union[str, Path],
    instances_per_class: int = 20,
    n_samples: int = 400,
    channels: int = 3,
    seed: int = 0,
) -> Tuple[Path, DatasetManifest]:
    """Write one CSV per sample under `out_dir/<label>/` plus a checksummed manifest."""

    out_dir = Path(out_dir)
    entries = []
    for sample in synthetic_samples(instances_per_class, n_samples, channels, seed):
        relative = Path(sample.label) / f"{sample.sample_id}.csv"
        written = write_series_csv(out_dir / relative, sample.channels)
        entries.append(ManifestEntry(
            path=relative.as_posix(),
            label=sample.label,
            sample_id=sample.sample_id,
            sha256=file_sha256(written),
        ))

    manifest = DatasetManifest(entries=entries, base_dir=str(out_dir))
    manifest_path = write_manifest(manifest, out_dir / store_settings.json_store.manifest_filename)
    logger.info("Wrote corpus of %d samples to %s", len(entries), out_dir)
    return manifest_path, manifest
