import hashlib
import logging
from functools import partial
from typing import List, Literal, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveInt

from config import settings
from dataset.loader import ActionSample
from topology.diagrams import PersistenceDiagram
from topology.embedding import EmbeddingConfig, TimeSeries, delay_embed, estimate_delay, subsample
from topology.filtration import build_rips
from topology.homology import Reduction, compute_persistence
from utils.errors import ChannelError, PipelineError
from utils.parallel import parallel_map

logger = logging.getLogger(__name__)


class SignatureConfig(BaseModel):
    """Everything that changes a signature. Its digest is the config fingerprint."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(default=3, ge=1)
    tau: Union[PositiveInt, Literal["auto"]] = "auto"
    max_points: int = Field(default=150, ge=2)
    eps_max: Union[NonNegativeFloat, Literal["diameter"]] = "diameter"
    temporal_links: bool = True
    zscore: bool = False
    aggregation: Literal["sum"] = "sum"

    @classmethod
    def from_settings(cls) -> "SignatureConfig":
        return cls(
            m=settings.embedding_dimension,
            tau=settings.embedding_delay or "auto",
            max_points=settings.max_points,
            eps_max="diameter" if settings.eps_max is None else settings.eps_max,
            temporal_links=settings.temporal_links,
            zscore=settings.zscore,
        )

    def digest(self) -> str:
        return hashlib.sha256(self.model_dump_json().encode("utf-8")).hexdigest()


class ChannelSignature(BaseModel):
    """Dimension-0 and dimension-1 diagrams of one channel."""

    channel: str
    tau: int
    n_points: int
    eps_max: float
    h0: PersistenceDiagram
    h1: PersistenceDiagram

    def diagram(self, dim: int) -> PersistenceDiagram:
        return self.h0 if dim == 0 else self.h1

    def finite(self, dim: int) -> PersistenceDiagram:
        """Diagram with essential classes closed at this channel's eps_max."""
        return self.diagram(dim).finitized()


class TopologicalSignature(BaseModel):
    sample_id: str
    label: str
    fingerprint: str
    config: SignatureConfig
    channels: List[ChannelSignature]

    @property
    def n_channels(self) -> int:
        return len(self.channels)

    def diagrams(self) -> List[PersistenceDiagram]:
        return [ch.diagram(dim) for ch in self.channels for dim in (0, 1)]


def channel_signature(
    series: TimeSeries,
    cfg: SignatureConfig,
    reduction: Reduction = "dual",
    keep_zero_persistence: bool = False,
) -> ChannelSignature:
    """delay_embed -> subsample -> build_rips -> compute_persistence for one channel."""

    if cfg.zscore:
        series = series.zscored()
    tau = estimate_delay(series) if cfg.tau == "auto" else cfg.tau

    embedding = EmbeddingConfig(m=cfg.m, tau=tau, max_points=cfg.max_points)
    cloud = subsample(delay_embed(series, embedding), embedding.max_points)
    eps_max = None if cfg.eps_max == "diameter" else float(cfg.eps_max)

    filtration = build_rips(cloud, eps_max, cfg.temporal_links)
    diagram = compute_persistence(filtration, reduction)
    if not keep_zero_persistence:
        diagram = diagram.without_zero_persistence()

    logger.debug(
        "Channel '%s': tau=%d, %d points, eps_max=%g, %d pairs",
        series.id, tau, len(cloud), filtration.eps_max, len(diagram),
    )
    return ChannelSignature(
        channel=series.id,
        tau=tau,
        n_points=len(cloud),
        eps_max=diagram.eps_max,
        h0=diagram.restrict(0),
        h1=diagram.restrict(1),
    )


def signature(sample: ActionSample, cfg: SignatureConfig, reduction: Reduction = "dual") -> TopologicalSignature:
    """Per-channel diagrams of a sample; component errors are re-raised with the channel id."""

    channels = []
    for i, series in enumerate(sample.channels):
        try:
            channels.append(channel_signature(series, cfg, reduction))
        except PipelineError as e:
            raise ChannelError(series.id or str(i), e) from e

    return TopologicalSignature(
        sample_id=sample.sample_id,
        label=sample.label,
        fingerprint=cfg.digest(),
        config=cfg,
        channels=channels,
    )


def compute_signatures(
    samples: Sequence[ActionSample],
    cfg: SignatureConfig,
    workers: int = 1,
    reduction: Reduction = "dual",
) -> List[TopologicalSignature]:
    """Signatures in sample order, computed once per sample."""

    logger.info("Computing signatures for %d samples (%d workers)", len(samples), workers)
    return parallel_map(partial(signature, cfg=cfg, reduction=reduction), samples, workers)
