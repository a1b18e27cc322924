import logging
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import List, Tuple

from topology.embedding import TimeSeries
from utils.parallel import parallel_map
from utils.errors import ChannelCountMismatch, ChecksumMismatch, MissingFile

from .manifest import DatasetManifest, ManifestEntry, file_sha256
from .series_io import read_series_csv

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ActionSample:
    """One labeled recording: D parallel scalar channels."""

    channels: Tuple[TimeSeries, ...]
    label: str
    sample_id: str
    allow_ragged: bool = False

    def __post_init__(self):
        channels = tuple(self.channels)
        if not channels:
            raise ValueError(f"Sample '{self.sample_id}' has no channels")
        if not self.allow_ragged and len({len(ch) for ch in channels}) > 1:
            raise ValueError(f"Sample '{self.sample_id}' has channels of differing lengths")
        object.__setattr__(self, "channels", channels)

    @property
    def n_channels(self) -> int:
        return len(self.channels)


def _load_entry(job: Tuple[Path, ManifestEntry], allow_ragged: bool) -> ActionSample:
    path, entry = job
    if not path.is_file():
        raise MissingFile(path)
    if entry.sha256 and file_sha256(path) != entry.sha256.lower():
        raise ChecksumMismatch(path)

    channels = read_series_csv(path, allow_ragged=allow_ragged)
    return ActionSample(tuple(channels), entry.label, entry.sample_id, allow_ragged)


def load_dataset(
    manifest: DatasetManifest,
    allow_ragged: bool = False,
    workers: int = 1,
) -> List[ActionSample]:
    """One ActionSample per manifest entry, in manifest order.

    Every sample must have as many channels as the first one.
    """

    manifest.check()
    jobs = [(manifest.resolve(e), e) for e in manifest.entries]
    samples = parallel_map(partial(_load_entry, allow_ragged=allow_ragged), jobs, workers)

    if samples:
        expected = samples[0].n_channels
        for s in samples:
            if s.n_channels != expected:
                raise ChannelCountMismatch(expected, s.n_channels, s.sample_id)

    logger.info("Loaded %d samples (%d classes)", len(samples), len(manifest.classes))
    return samples
