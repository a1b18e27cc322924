"""Time-series CSV files: one column per channel, header row with channel ids, one row per tick."""

import logging
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np
import pandas as pd

from topology.embedding import TimeSeries
from utils.errors import MissingFile, ParseError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

# Data rows start on line 2 of the file (line 1 is the header).
FIRST_DATA_LINE = 2

# 17 significant digits round-trip every float64.
CSV_FLOAT_FORMAT = "%.17g"


def read_series_csv(path: PathLike, allow_ragged: bool = False) -> List[TimeSeries]:
    """Read every column of a CSV file as a TimeSeries named after its header.

    With `allow_ragged`, a column may end in blank cells (shorter channel); a blank
    followed by a value is still an error. ParseError rows are 1-based file line numbers.
    """

    path = Path(path)
    if not path.is_file():
        raise MissingFile(path)

    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    except pd.errors.EmptyDataError:
        raise ParseError(path, reason="file is empty")
    except pd.errors.ParserError as e:
        raise ParseError(path, reason=str(e).strip())

    if frame.shape[1] == 0:
        raise ParseError(path, reason="no channels in header")

    return [_parse_column(path, str(name), frame[name], allow_ragged) for name in frame.columns]


def _parse_column(path: Path, name: str, cells: pd.Series, allow_ragged: bool) -> TimeSeries:
    text = cells.str.strip()
    blank = (text == "").to_numpy()

    length = len(text)
    if blank.any():
        if not allow_ragged:
            row = int(np.flatnonzero(blank)[0])
            raise ParseError(path, row + FIRST_DATA_LINE, name, "missing value")
        filled = np.flatnonzero(~blank)
        length = int(filled[-1]) + 1 if filled.size else 0
        gaps = np.flatnonzero(blank[:length])
        if gaps.size:
            raise ParseError(path, int(gaps[0]) + FIRST_DATA_LINE, name, "blank cell inside channel")

    if length == 0:
        raise ParseError(path, column=name, reason="channel has no samples")

    text = text.iloc[:length]
    values = pd.to_numeric(text, errors="coerce").to_numpy(dtype=np.float64)
    # Literal nan/inf parse as numbers and are reported by TimeSeries as NonFiniteSample.
    unparsed = np.isnan(values) & ~text.str.lower().isin(["nan", "-nan", "+nan"]).to_numpy()
    if unparsed.any():
        row = int(np.flatnonzero(unparsed)[0])
        raise ParseError(path, row + FIRST_DATA_LINE, name, f"not a number: {text.iloc[row]!r}")

    return TimeSeries(values, name)


def series_frame(channels: Sequence[TimeSeries]) -> pd.DataFrame:
    """Channels side by side; shorter channels are padded with NaN."""

    columns = {}
    for i, ch in enumerate(channels):
        name = ch.id or f"c{i}"
        if name in columns:
            raise ValueError(f"Duplicate channel id: {name}")
        columns[name] = pd.Series(ch.samples)
    return pd.DataFrame(columns)


def write_series_csv(path: PathLike, channels: Sequence[TimeSeries]) -> Path:
    """Write channels side by side; shorter channels end in blank cells."""

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    frame = series_frame(channels)
    frame.to_csv(path, index=False, na_rep="", float_format=CSV_FLOAT_FORMAT)
    logger.debug("Wrote %d channels x %d rows to %s", frame.shape[1], frame.shape[0], path)
    return path
