"""Vietoris-Rips filtrations up to dimension 2, optionally threaded by temporal links.

A filtration is stored column-wise: one row per simplex in filtration order, with
its value, dimension and vertex tuple (padded with -1). Rows are sorted by
(value, dimension, vertices), which puts every face before its cofaces.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import pdist, squareform

from utils.errors import MalformedFiltration, NegativeScale

from .embedding import PointCloud

logger = logging.getLogger(__name__)

MAX_DIM = 2


@dataclass(frozen=True)
class Simplex:
    vertices: Tuple[int, ...]
    value: float

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class FaceIndex:
    """Filtration positions of every simplex and of its facets, per dimension."""

    vertex_positions: np.ndarray
    edge_positions: np.ndarray
    edge_faces: np.ndarray
    triangle_positions: np.ndarray
    triangle_faces: np.ndarray


@dataclass(frozen=True, eq=False)
class Filtration:
    values: np.ndarray
    dims: np.ndarray
    vertices: np.ndarray
    eps_max: float
    n_vertices: int

    def __len__(self) -> int:
        return int(self.values.size)

    def __iter__(self) -> Iterator[Simplex]:
        for value, dim, verts in zip(self.values.tolist(), self.dims.tolist(), self.vertices.tolist()):
            yield Simplex(tuple(verts[: dim + 1]), value)

    @property
    def simplices(self) -> List[Simplex]:
        return list(self)

    def count(self, dim: int) -> int:
        return int(np.count_nonzero(self.dims == dim))

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Union[Simplex, Tuple[Sequence[int], float]]],
        eps_max: Optional[float] = None,
        n_vertices: Optional[int] = None,
    ) -> "Filtration":
        """Assemble a filtration from arbitrary simplices, sorting them into filtration order."""

        rows = []
        for s in simplices:
            verts, value = (s.vertices, s.value) if isinstance(s, Simplex) else s
            verts = tuple(int(v) for v in verts)
            if not 1 <= len(verts) <= MAX_DIM + 1:
                raise MalformedFiltration(len(rows), f"simplex {verts} has unsupported dimension")
            rows.append((verts, float(value)))

        values = np.array([value for _, value in rows], dtype=np.float64)
        dims = np.array([len(verts) - 1 for verts, _ in rows], dtype=np.int8)
        vertices = np.full((len(rows), MAX_DIM + 1), -1, dtype=np.int64)
        for i, (verts, _) in enumerate(rows):
            vertices[i, : len(verts)] = verts

        if n_vertices is None:
            n_vertices = int(vertices.max()) + 1 if len(rows) else 0
        if eps_max is None:
            eps_max = float(values.max()) if len(rows) else 0.0
        return _assemble(values, dims, vertices, float(eps_max), int(n_vertices))

    def to_text(self) -> str:
        """One simplex per line: `value dim v0 [v1 [v2]]`, in stored order."""

        lines = []
        for s in self:
            lines.append(" ".join([repr(s.value), str(s.dim), *map(str, s.vertices)]))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, eps_max: Optional[float] = None) -> "Filtration":
        simplices = []
        for line in text.splitlines():
            if not line.strip():
                continue
            value, dim, *verts = line.split()
            if len(verts) != int(dim) + 1:
                raise MalformedFiltration(len(simplices), f"line '{line}' lists {len(verts)} vertices for dim {dim}")
            simplices.append((tuple(int(v) for v in verts), float(value)))
        return cls.from_simplices(simplices, eps_max=eps_max)

    def face_index(self) -> FaceIndex:
        """Locate every facet in the filtration, raising MalformedFiltration on any violation."""

        n = self.n_vertices
        values, dims, verts = self.values, self.dims, self.vertices
        size = len(self)

        if size:
            bad = np.flatnonzero((values < 0) | ~np.isfinite(values) | (values > self.eps_max))
            if bad.size:
                raise MalformedFiltration(int(bad[0]), f"value {values[bad[0]]} outside [0, {self.eps_max}]")
            bad = np.flatnonzero((dims < 0) | (dims > MAX_DIM))
            if bad.size:
                raise MalformedFiltration(int(bad[0]), f"unsupported dimension {dims[bad[0]]}")

        for k in range(MAX_DIM + 1):
            rows = np.flatnonzero(dims == k)
            used, padding = verts[rows, : k + 1], verts[rows, k + 1:]
            bad = (used < 0).any(axis=1) | (used >= n).any(axis=1) | (padding != -1).any(axis=1)
            if k:
                bad |= (np.diff(used, axis=1) <= 0).any(axis=1)
            if bad.any():
                raise MalformedFiltration(int(rows[bad][0]), "vertex tuple is not strictly increasing in range")

        if size > 1:
            key = _lex_key(dims, verts, n)
            later = (values[1:] > values[:-1]) | ((values[1:] == values[:-1]) & (key[1:] > key[:-1]))
            bad = np.flatnonzero(~later)
            if bad.size:
                raise MalformedFiltration(int(bad[0]) + 1, "simplices not sorted by (value, dimension, vertices)")

        vertex_positions = np.flatnonzero(dims == 0)
        ids = verts[vertex_positions, 0]
        position_of_vertex = np.full(n, -1, dtype=np.int64)
        position_of_vertex[ids] = vertex_positions
        if np.unique(ids).size != ids.size:
            raise MalformedFiltration(int(vertex_positions[-1]), "duplicate vertex")

        edge_positions = np.flatnonzero(dims == 1)
        ends = verts[edge_positions, :2]
        edge_faces = position_of_vertex[ends]
        bad = ((edge_faces < 0) | (edge_faces > edge_positions[:, None])).any(axis=1)
        if bad.any():
            raise MalformedFiltration(int(edge_positions[bad][0]), "edge precedes or lacks a vertex")

        edge_keys = ends[:, 0] * n + ends[:, 1]
        if np.unique(edge_keys).size != edge_keys.size:
            raise MalformedFiltration(int(edge_positions[-1]), "duplicate edge")
        edge_at = np.full((n, n), -1, dtype=np.int64)
        edge_at[ends[:, 0], ends[:, 1]] = edge_positions

        triangle_positions = np.flatnonzero(dims == 2)
        tri = verts[triangle_positions, :3]
        triangle_faces = np.column_stack([
            edge_at[tri[:, 0], tri[:, 1]],
            edge_at[tri[:, 0], tri[:, 2]],
            edge_at[tri[:, 1], tri[:, 2]],
        ]).reshape(-1, 3)
        bad = ((triangle_faces < 0) | (triangle_faces > triangle_positions[:, None])).any(axis=1)
        if bad.any():
            raise MalformedFiltration(int(triangle_positions[bad][0]), "triangle precedes or lacks an edge")
        tri_keys = (tri[:, 0] * n + tri[:, 1]) * n + tri[:, 2]
        if np.unique(tri_keys).size != tri_keys.size:
            raise MalformedFiltration(int(triangle_positions[-1]), "duplicate triangle")

        return FaceIndex(vertex_positions, edge_positions, edge_faces, triangle_positions, triangle_faces)


def _lex_key(dims: np.ndarray, vertices: np.ndarray, n_vertices: int) -> np.ndarray:
    """One int64 per row that orders rows by (dimension, vertex tuple); padding sorts first."""
    base = max(n_vertices, int(vertices.max(initial=-1)) + 1) + 1
    key = dims.astype(np.int64)
    for j in range(MAX_DIM + 1):
        key = key * base + (vertices[:, j] + 1)
    return key


def _assemble(values, dims, vertices, eps_max: float, n_vertices: int, lex_ordered: bool = False) -> Filtration:
    """Sort rows into filtration order. Rows already in (dimension, vertices) order need only a stable sort by value."""
    if lex_ordered:
        order = np.argsort(values, kind="stable")
    else:
        order = np.lexsort((_lex_key(dims, vertices, n_vertices), values))
    return Filtration(
        values=values[order],
        dims=dims[order],
        vertices=vertices[order],
        eps_max=eps_max,
        n_vertices=n_vertices,
    )


def distance_matrix(cloud: PointCloud) -> np.ndarray:
    cloud.require_nonempty()
    if len(cloud) == 1:
        return np.zeros((1, 1))
    return squareform(pdist(cloud.points))


def diameter(cloud: PointCloud) -> float:
    """Largest pairwise Euclidean distance; 0 for a single point."""

    cloud.require_nonempty()
    if len(cloud) == 1:
        return 0.0
    return float(pdist(cloud.points).max())


@lru_cache(maxsize=4)
def _triples(n: int) -> np.ndarray:
    """All vertex triples a < b < c in lexicographic order (read-only, shared between calls)."""
    count = n * (n - 1) * (n - 2) // 6
    flat = np.fromiter(itertools.chain.from_iterable(itertools.combinations(range(n), 3)), dtype=np.int64, count=3 * count)
    flat.setflags(write=False)
    return flat.reshape(-1, 3)


def build_rips(cloud: PointCloud, eps_max: Optional[float] = None, temporal_links: bool = True) -> Filtration:
    """Vietoris-Rips flag filtration truncated at `eps_max` (None: the cloud diameter).

    Edges enter at their Euclidean length; with `temporal_links`, edges between
    consecutive points enter at 0 whatever their length. Triangles enter at the
    largest value among their three edges.
    """

    cloud.require_nonempty()
    if eps_max is not None and eps_max < 0:
        raise NegativeScale(eps_max)

    n = len(cloud)
    dist = distance_matrix(cloud)
    if eps_max is None:
        eps_max = float(dist.max())

    weights = np.where(dist <= eps_max, dist, np.inf)
    if temporal_links and n > 1:
        if not cloud.temporal_order:
            logger.warning("Temporal links requested on a cloud without temporal order")
        step = np.arange(n - 1)
        weights[step, step + 1] = 0.0
        weights[step + 1, step] = 0.0

    ii, jj = np.triu_indices(n, k=1)
    edge_values = weights[ii, jj]
    keep = np.isfinite(edge_values)
    ii, jj, edge_values = ii[keep], jj[keep], edge_values[keep]

    if n >= 3:
        tri = _triples(n)
        a, b, c = tri[:, 0], tri[:, 1], tri[:, 2]
        tri_values = np.maximum(np.maximum(weights[a, b], weights[a, c]), weights[b, c])
        keep = np.isfinite(tri_values)
        tri, tri_values = tri[keep], tri_values[keep]
    else:
        tri, tri_values = np.empty((0, 3), dtype=np.int64), np.empty(0)

    n_edges, n_tri = edge_values.size, tri_values.size
    values = np.concatenate([np.zeros(n), edge_values, tri_values])
    dims = np.concatenate([
        np.zeros(n, dtype=np.int8),
        np.ones(n_edges, dtype=np.int8),
        np.full(n_tri, 2, dtype=np.int8),
    ])
    vertices = np.full((n + n_edges + n_tri, MAX_DIM + 1), -1, dtype=np.int64)
    vertices[:n, 0] = np.arange(n)
    vertices[n: n + n_edges, 0] = ii
    vertices[n: n + n_edges, 1] = jj
    vertices[n + n_edges:, :] = tri

    logger.debug("Rips filtration: %d vertices, %d edges, %d triangles, eps_max=%.6g", n, n_edges, n_tri, eps_max)
    return _assemble(values, dims, vertices, float(eps_max), n, lex_ordered=True)
