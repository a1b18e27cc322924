from .series_io import read_series_csv, write_series_csv
from .manifest import DatasetManifest, ManifestEntry, file_sha256, read_manifest, write_manifest
from .loader import ActionSample, load_dataset
from .splits import Split, make_splits
from .synthetic import CORPUS_CLASSES, synthetic_samples, write_corpus

__all__ = [
    "read_series_csv",
    "write_series_csv",
    "DatasetManifest",
    "ManifestEntry",
    "file_sha256",
    "read_manifest",
    "write_manifest",
    "ActionSample",
    "load_dataset",
    "Split",
    "make_splits",
    "CORPUS_CLASSES",
    "synthetic_samples",
    "write_corpus",
]
