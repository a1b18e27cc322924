import logging
import math
from functools import partial
from typing import List, Sequence

import numpy as np

from topology.diagrams import PersistenceDiagram
from topology.metrics import wasserstein1
from utils.errors import ChannelCountMismatch, FingerprintMismatch
from utils.parallel import parallel_map

from .signature import TopologicalSignature

logger = logging.getLogger(__name__)

HOMOLOGY_DIMS = (0, 1)


def _check_comparable(a: TopologicalSignature, b: TopologicalSignature) -> None:
    if a.fingerprint != b.fingerprint:
        raise FingerprintMismatch(a.fingerprint, b.fingerprint)
    if a.n_channels != b.n_channels:
        raise ChannelCountMismatch(a.n_channels, b.n_channels, b.sample_id)


def _finite_diagrams(s: TopologicalSignature) -> List[PersistenceDiagram]:
    return [ch.finite(dim) for ch in s.channels for dim in HOMOLOGY_DIMS]


def _aggregate(x: Sequence[PersistenceDiagram], y: Sequence[PersistenceDiagram]) -> float:
    return math.fsum(wasserstein1(dx, dy) for dx, dy in zip(x, y))


def sample_distance(a: TopologicalSignature, b: TopologicalSignature) -> float:
    """Unweighted sum of 1-Wasserstein distances over channels and homology dims 0 and 1."""

    _check_comparable(a, b)
    return _aggregate(_finite_diagrams(a), _finite_diagrams(b))


def _distance_row(i: int, diagrams: List[List[PersistenceDiagram]]) -> np.ndarray:
    row = np.zeros(len(diagrams))
    for j in range(i + 1, len(diagrams)):
        row[j] = _aggregate(diagrams[i], diagrams[j])
    return row


def pairwise_distances(signatures: Sequence[TopologicalSignature], workers: int = 1) -> np.ndarray:
    """Symmetric matrix of sample_distance over all pairs; the diagonal is 0."""

    n = len(signatures)
    for s in signatures[1:]:
        _check_comparable(signatures[0], s)

    diagrams = [_finite_diagrams(s) for s in signatures]
    logger.info("Computing %d pairwise sample distances", n * (n - 1) // 2)

    rows = parallel_map(partial(_distance_row, diagrams=diagrams), range(n), workers)
    upper = np.vstack(rows) if rows else np.zeros((0, 0))
    return upper + upper.T
