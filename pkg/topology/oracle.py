"""Brute-force persistence for small filtrations, used to check the reductions.

Betti numbers of every prefix identify the creator simplices; pairs come from the
rank-difference formula on the boundary matrix D over GF(2):

    simplex i is killed by simplex j  iff  r(i, j) - r(i+1, j) + r(i+1, j-1) - r(i, j-1) = 1

where r(i, j) is the rank of the lower-left block of D (rows >= i, columns <= j).
Columns are Python ints used as bit vectors.
"""

import logging
from typing import Dict, List, Sequence, Tuple

import numpy as np

from utils.errors import TooLargeForOracle

from .diagrams import PersistenceDiagram
from .filtration import Filtration
from .homology import diagram_from_positions

logger = logging.getLogger(__name__)

MAX_ORACLE_VERTICES = 16


def rank_profile(columns: Sequence[int]) -> np.ndarray:
    """Rank of the first q columns for q = 0..len(columns), by incremental GF(2) elimination."""

    basis: Dict[int, int] = {}
    ranks = np.zeros(len(columns) + 1, dtype=np.int64)
    for q, column in enumerate(columns):
        while column:
            top = column.bit_length() - 1
            if top not in basis:
                basis[top] = column
                break
            column ^= basis[top]
        ranks[q + 1] = len(basis)
    return ranks


def naive_persistence_oracle(f: Filtration, max_vertices: int = MAX_ORACLE_VERTICES) -> PersistenceDiagram:
    if f.n_vertices > max_vertices:
        raise TooLargeForOracle(f.n_vertices, max_vertices)

    faces = f.face_index()
    by_dim = [faces.vertex_positions.tolist(), faces.edge_positions.tolist(), faces.triangle_positions.tolist()]
    facets = [None, faces.edge_faces.tolist(), faces.triangle_faces.tolist()]

    # Bit r of a dimension-k column marks the r-th (k-1)-simplex in filtration order.
    columns: List[List[int]] = [[]]
    for k in (1, 2):
        row_of = {pos: r for r, pos in enumerate(by_dim[k - 1])}
        columns.append([sum(1 << row_of[face] for face in facet) for facet in facets[k]])

    rank_edges = rank_profile(columns[1])
    rank_triangles = rank_profile(columns[2])
    creators = _creators(f, by_dim, rank_edges, rank_triangles)

    pairs: List[Tuple[int, int]] = []
    for k in (0, 1):
        pairs.extend(_rank_difference_pairs(by_dim[k], by_dim[k + 1], columns[k + 1]))

    born = {b for b, _ in pairs}
    essential = [s for s in creators if s not in born]
    return diagram_from_positions(f, pairs, essential)


def _creators(f: Filtration, by_dim, rank_edges: np.ndarray, rank_triangles: np.ndarray) -> List[int]:
    """Vertices and edges whose entry raises a Betti number of the growing prefix complex."""

    dims = f.dims
    size = len(f)
    seen = np.zeros((3, size + 1), dtype=np.int64)
    for k in range(3):
        seen[k, 1:] = np.cumsum(dims == k)

    rank1 = rank_edges[seen[1]]
    rank2 = rank_triangles[seen[2]]
    betti0 = seen[0] - rank1
    betti1 = seen[1] - rank1 - rank2

    creators = []
    for j in by_dim[0]:
        if betti0[j + 1] > betti0[j]:
            creators.append(j)
    for j in by_dim[1]:
        if betti1[j + 1] > betti1[j]:
            creators.append(j)
    return creators


def _rank_difference_pairs(rows: List[int], cols: List[int], columns: List[int]) -> List[Tuple[int, int]]:
    n_rows, n_cols = len(rows), len(cols)
    if n_rows == 0 or n_cols == 0:
        return []

    r = np.zeros((n_rows + 1, n_cols + 1), dtype=np.int64)
    for p in range(n_rows):
        r[p] = rank_profile([c >> p for c in columns])

    mu = r[:-1, 1:] - r[1:, 1:] + r[1:, :-1] - r[:-1, :-1]
    return [(rows[p], cols[q]) for p, q in np.argwhere(mu == 1).tolist()]
