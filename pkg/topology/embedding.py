import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from utils.errors import EmptyCloud, NonFiniteSample, SeriesTooShort

logger = logging.getLogger(__name__)

# Two-sided 95% band of the sample autocorrelation of white noise, in units of 1/sqrt(T).
# A lag-1 autocorrelation inside it means the series is already decorrelated.
WHITE_NOISE_BAND = 1.96


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """One scalar observable sampled at uniform ticks."""

    samples: np.ndarray
    id: str = ""

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64).reshape(-1)
        if samples.size == 0:
            raise SeriesTooShort(0, 1)
        bad = np.flatnonzero(~np.isfinite(samples))
        if bad.size:
            raise NonFiniteSample(self.id, int(bad[0]))
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return int(self.samples.size)

    def zscored(self) -> "TimeSeries":
        """Center the series and scale it to unit variance (constant series are only centered)."""
        centered = self.samples - self.samples.mean()
        std = centered.std()
        return TimeSeries(centered / std if std > 0 else centered, self.id)


class EmbeddingConfig(BaseModel):
    m: int = Field(default=3, ge=1)
    tau: int = Field(default=1, ge=1)
    max_points: int = Field(default=150, ge=2)


@dataclass(frozen=True, eq=False)
class PointCloud:
    """Delay vectors in R^m. Row order is time order; `indices` are the source time indices."""

    points: np.ndarray
    temporal_order: bool = True
    indices: Optional[np.ndarray] = field(default=None, compare=False)

    def __post_init__(self):
        points = np.asarray(self.points, dtype=np.float64)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        indices = self.indices
        if indices is None:
            indices = np.arange(points.shape[0])
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "indices", np.asarray(indices, dtype=np.int64))

    def __len__(self) -> int:
        return int(self.points.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.points.shape[1])

    def require_nonempty(self) -> None:
        if len(self) == 0:
            raise EmptyCloud()


def delay_embed(series: TimeSeries, cfg: EmbeddingConfig) -> PointCloud:
    """Stack lagged copies of the series: point n is [x(n), x(n+tau), ..., x(n+(m-1)tau)]."""

    span = (cfg.m - 1) * cfg.tau
    n_points = len(series) - span
    if n_points < 2:
        raise SeriesTooShort(len(series), span + 2)

    x = series.samples
    points = np.column_stack([x[j * cfg.tau: j * cfg.tau + n_points] for j in range(cfg.m)])
    return PointCloud(points, temporal_order=True)


def autocorrelation(samples: Sequence[float], max_lag: int) -> np.ndarray:
    """Biased sample autocorrelation r(0..max_lag) by direct summation; all zeros if constant."""

    x = np.asarray(samples, dtype=np.float64)
    d = x - x.mean()
    denom = float(np.dot(d, d))
    r = np.zeros(max_lag + 1)
    if denom == 0.0:
        return r
    for lag in range(max_lag + 1):
        r[lag] = np.dot(d[: d.size - lag], d[lag:]) / denom
    return r


def estimate_delay(series: TimeSeries) -> int:
    """Lag of the first zero crossing of the sample autocorrelation.

    The crossing lies between the last positive lag k and the first lag k + 1 with
    r <= 0; the delay is k, the lag at which it starts. Series whose lag-1
    autocorrelation is already inside the white-noise band 1.96/sqrt(T) get 1, as
    do constant series and series that never cross within T/2.
    """

    n = len(series)
    if n < 4:
        raise SeriesTooShort(n, 4)

    max_lag = n // 2
    r = autocorrelation(series.samples, max_lag)
    if r[0] == 0.0:
        return 1

    if abs(r[1]) <= WHITE_NOISE_BAND / np.sqrt(n):
        return 1

    crossed = np.flatnonzero(r[1:] <= 0.0)
    if crossed.size:
        return max(1, int(crossed[0]))

    logger.debug("No autocorrelation crossing within %d lags for '%s'", max_lag, series.id)
    return 1


def subsample(cloud: PointCloud, max_points: int) -> PointCloud:
    """Keep at most `max_points` points at uniformly spaced temporal indices (endpoints kept)."""

    n = len(cloud)
    if n <= max_points:
        return cloud

    picks = np.round(np.linspace(0, n - 1, max_points)).astype(np.int64)
    return PointCloud(cloud.points[picks], cloud.temporal_order, cloud.indices[picks])
