from pydantic import BaseModel, Field

from classify.signature import SignatureConfig
from topology.diagrams import PersistenceDiagram


class DiagramRecord(BaseModel):
    """One channel's diagram in one homology dimension, with the config that produced it."""

    channel: str
    dim: int = Field(ge=0, le=1)
    tau: int
    n_points: int
    fingerprint: str
    config: SignatureConfig
    seed: int
    diagram: PersistenceDiagram
