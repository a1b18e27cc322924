from typing import List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, NonNegativeFloat, PositiveInt

from classify.evaluate import EvalProtocol
from classify.signature import SignatureConfig
from config import settings


class RunConfig(BaseModel):
    """Effective parameters of one CLI run, after flags override settings."""

    model_config = ConfigDict(frozen=True)

    # Embedding
    m: int = Field(default=settings.embedding_dimension, ge=1)
    tau: Union[PositiveInt, Literal["auto"]] = settings.embedding_delay or "auto"
    max_points: int = Field(default=settings.max_points, ge=2)

    # Filtration
    eps_max: Union[NonNegativeFloat, Literal["diameter"]] = "diameter" if settings.eps_max is None else settings.eps_max
    temporal_links: bool = settings.temporal_links
    reduction: Literal["dual", "twist"] = settings.reduction
    zscore: bool = settings.zscore

    # Diagrams
    threshold: Optional[NonNegativeFloat] = None  # None: threshold_fraction * eps_max
    threshold_fraction: NonNegativeFloat = settings.threshold_fraction
    keep_zero_persistence: bool = settings.keep_zero_persistence

    # Protocol
    n_splits: int = Field(default=settings.n_splits, ge=1)
    test_per_class: int = Field(default=settings.test_per_class, ge=0)
    k: int = Field(default=settings.k, ge=1)
    seed: int = settings.seed
    threads: int = Field(default=settings.threads, ge=1)

    # Paths
    inputs: List[str] = []
    out: Optional[str] = None

    def signature_config(self) -> SignatureConfig:
        return SignatureConfig(
            m=self.m,
            tau=self.tau,
            max_points=self.max_points,
            eps_max=self.eps_max,
            temporal_links=self.temporal_links,
            zscore=self.zscore,
        )

    def protocol(self) -> EvalProtocol:
        return EvalProtocol(n_splits=self.n_splits, test_per_class=self.test_per_class, seed=self.seed, k=self.k)

    def persistence_threshold(self, eps_max: float) -> float:
        return self.threshold if self.threshold is not None else self.threshold_fraction * eps_max

    def to_json(self) -> str:
        return self.model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        return cls.model_validate_json(text)
