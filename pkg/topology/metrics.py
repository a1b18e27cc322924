"""Distances between persistence diagrams by optimal matching with the diagonal.

Each diagram is augmented with one diagonal slot per point of the other diagram,
so a point either matches a point or its own projection onto the diagonal:

              Y points          X-diagonal slots
    X points  ground(x, y)      diag(x) on every slot
    Y-diag    diag(y)           0

Wasserstein uses the L1 ground metric (diag = d - b), bottleneck uses L-inf
(diag = (d - b) / 2).
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal, Tuple

import numpy as np
from scipy.optimize import linear_sum_assignment
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .diagrams import PersistenceDiagram, single_dimension

logger = logging.getLogger(__name__)

POINT_TO_POINT = 0
POINT_TO_DIAGONAL = 1
DIAGONAL_TO_DIAGONAL = 2

GroundMetric = Literal["l1", "linf"]


@dataclass(frozen=True, eq=False)
class MatchingProblem:
    cost_matrix: np.ndarray
    provenance: np.ndarray

    def __post_init__(self):
        cost = np.asarray(self.cost_matrix, dtype=np.float64)
        if cost.ndim != 2 or cost.shape[0] != cost.shape[1]:
            raise ValueError(f"Cost matrix must be square, got shape {cost.shape}")
        if not np.all(np.isfinite(cost)):
            raise ValueError("Cost matrix must be finite")
        object.__setattr__(self, "cost_matrix", cost)

    @property
    def size(self) -> int:
        return int(self.cost_matrix.shape[0])

    @classmethod
    def from_costs(cls, cost_matrix) -> "MatchingProblem":
        cost = np.asarray(cost_matrix, dtype=np.float64)
        return cls(cost, np.full(cost.shape, POINT_TO_POINT, dtype=np.int8))


def assignment_solve(p: MatchingProblem) -> Tuple[np.ndarray, float]:
    """Minimum-cost perfect matching. Returns (column assigned to each row, total cost)."""

    if p.size == 0:
        return np.empty(0, dtype=np.int64), 0.0
    rows, cols = linear_sum_assignment(p.cost_matrix)
    matching = np.empty(p.size, dtype=np.int64)
    matching[rows] = cols
    return matching, math.fsum(p.cost_matrix[rows, cols].tolist())


def _diagonal_cost(points: np.ndarray, ground: GroundMetric) -> np.ndarray:
    lifetime = points[:, 1] - points[:, 0]
    return lifetime if ground == "l1" else lifetime / 2.0


def matching_problem(x: np.ndarray, y: np.ndarray, ground: GroundMetric) -> MatchingProblem:
    """Diagonal-augmented cost matrix of side |X| + |Y|."""

    nx, ny = x.shape[0], y.shape[0]
    size = nx + ny
    cost = np.zeros((size, size))
    provenance = np.full((size, size), DIAGONAL_TO_DIAGONAL, dtype=np.int8)

    if nx and ny:
        delta = np.abs(x[:, None, :] - y[None, :, :])
        cost[:nx, :ny] = delta.sum(axis=2) if ground == "l1" else delta.max(axis=2)
        provenance[:nx, :ny] = POINT_TO_POINT
    cost[:nx, ny:] = _diagonal_cost(x, ground)[:, None]
    cost[nx:, :ny] = _diagonal_cost(y, ground)[None, :]
    provenance[:nx, ny:] = POINT_TO_DIAGONAL
    provenance[nx:, :ny] = POINT_TO_DIAGONAL
    return MatchingProblem(cost, provenance)


def _ordered_points(x: PersistenceDiagram, y: PersistenceDiagram) -> Tuple[np.ndarray, np.ndarray]:
    single_dimension(x, y)
    px, py = x.points(), y.points()
    # Solve in a canonical argument order so that d(X, Y) and d(Y, X) run the same computation.
    if (py.shape[0], py.tolist()) < (px.shape[0], px.tolist()):
        px, py = py, px
    return px, py


def wasserstein1(x: PersistenceDiagram, y: PersistenceDiagram) -> float:
    """1-Wasserstein distance with L1 ground metric between two finite, one-dimension diagrams."""

    px, py = _ordered_points(x, y)
    if px.shape[0] + py.shape[0] == 0:
        return 0.0
    _, total = assignment_solve(matching_problem(px, py, "l1"))
    return total


def bottleneck(x: PersistenceDiagram, y: PersistenceDiagram) -> float:
    """Bottleneck distance (L-inf ground metric) by binary search over candidate costs.

    A threshold is feasible when the bipartite graph of entries at or below it has a
    perfect matching; the answer is the smallest feasible entry of the cost matrix.
    """

    px, py = _ordered_points(x, y)
    if px.shape[0] + py.shape[0] == 0:
        return 0.0
    cost = matching_problem(px, py, "linf").cost_matrix
    candidates = np.unique(cost)

    lo, hi = 0, candidates.size - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _has_perfect_matching(cost <= candidates[mid]):
            hi = mid
        else:
            lo = mid + 1
    return float(candidates[lo])


def _has_perfect_matching(allowed: np.ndarray) -> bool:
    matched = maximum_bipartite_matching(csr_matrix(allowed.astype(np.int8)), perm_type="column")
    return bool(np.all(matched >= 0))
