import hashlib
import logging
from collections import Counter
from pathlib import Path
from typing import List, Optional, Union

import pandas as pd
from pydantic import BaseModel

from utils.errors import ManifestError, MissingFile, ParseError

logger = logging.getLogger(__name__)

MANIFEST_COLUMNS = ["path", "label", "sample_id", "sha256"]
REQUIRED_COLUMNS = ["path", "label", "sample_id"]


class ManifestEntry(BaseModel):
    path: str
    label: str
    sample_id: str
    sha256: Optional[str] = None


class DatasetManifest(BaseModel):
    """Labeled sample files. Relative entry paths resolve against `base_dir`."""

    entries: List[ManifestEntry] = []
    base_dir: str = "."

    @property
    def classes(self) -> List[str]:
        return sorted({e.label for e in self.entries})

    def resolve(self, entry: ManifestEntry) -> Path:
        path = Path(entry.path)
        return path if path.is_absolute() else Path(self.base_dir) / path

    def check(self) -> "DatasetManifest":
        duplicates = [sid for sid, n in Counter(e.sample_id for e in self.entries).items() if n > 1]
        if duplicates:
            raise ManifestError(f"Duplicate sample ids: {sorted(duplicates)}")
        if any(not e.label for e in self.entries):
            raise ManifestError("Every entry needs a nonempty label")
        return self


def file_sha256(path: Union[str, Path]) -> str:
    digest = hashlib.sha256()
    with Path(path).open("rb") as f:
        for block in iter(lambda: f.read(1 << 16), b""):
            digest.update(block)
    return digest.hexdigest()


def read_manifest(path: Union[str, Path]) -> DatasetManifest:
    path = Path(path)
    if not path.is_file():
        raise MissingFile(path)

    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        return DatasetManifest(base_dir=str(path.parent))
    except pd.errors.ParserError as e:
        raise ParseError(path, reason=str(e).strip())

    for column in REQUIRED_COLUMNS:
        if column not in frame.columns:
            raise ParseError(path, column=column, reason="missing manifest column")

    entries = [
        ManifestEntry(
            path=row["path"].strip(),
            label=row["label"].strip(),
            sample_id=row["sample_id"].strip(),
            sha256=(row.get("sha256") or "").strip() or None,
        )
        for row in frame.to_dict(orient="records")
    ]
    manifest = DatasetManifest(entries=entries, base_dir=str(path.parent)).check()
    logger.info("Read manifest %s: %d entries, %d classes", path, len(entries), len(manifest.classes))
    return manifest


def write_manifest(manifest: DatasetManifest, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = [{**e.model_dump(), "sha256": e.sha256 or ""} for e in manifest.entries]
    pd.DataFrame(rows, columns=MANIFEST_COLUMNS).to_csv(path, index=False)
    return path
