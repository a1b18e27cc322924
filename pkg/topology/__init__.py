from .embedding import EmbeddingConfig, PointCloud, TimeSeries, delay_embed, estimate_delay, subsample
from .filtration import Filtration, Simplex, build_rips, diameter
from .diagrams import (
    ESSENTIAL,
    PersistenceDiagram,
    PersistencePair,
    finitize_common,
    persistent_betti,
)
from .homology import compute_persistence
from .oracle import naive_persistence_oracle
from .metrics import MatchingProblem, assignment_solve, bottleneck, wasserstein1

__all__ = [
    "EmbeddingConfig",
    "PointCloud",
    "TimeSeries",
    "delay_embed",
    "estimate_delay",
    "subsample",
    "Filtration",
    "Simplex",
    "build_rips",
    "diameter",
    "ESSENTIAL",
    "PersistenceDiagram",
    "PersistencePair",
    "finitize_common",
    "persistent_betti",
    "compute_persistence",
    "naive_persistence_oracle",
    "MatchingProblem",
    "assignment_solve",
    "bottleneck",
    "wasserstein1",
]
