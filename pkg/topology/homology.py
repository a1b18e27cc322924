"""Persistence pairs in dimensions 0 and 1 by GF(2) matrix reduction.

Two strategies produce the same index-level pairing:

* ``twist``: left-to-right reduction of the boundary matrix, triangle columns
  first so that every pivot edge can be cleared before the edge columns run.
  Columns are Python ints used as bit vectors over facet ranks.
* ``dual``: reduction of the anti-transposed boundary matrix. Edge coboundaries
  are processed in reverse filtration order and the pivot of a column is its
  earliest coface; a pivot at triangle t pairs the edge with t. Dimension 0 is
  the union-find specialization of the edge-column reduction (elder rule).
  A reduced coboundary is stored as the sorted array of edges it sums; the
  column under reduction lives in a dense boolean array over triangles.

Both start from the apparent pairs: an edge whose earliest coface has that edge
as its latest facet is paired with that triangle without any column operation.
Simplices are addressed by rank within their dimension and mapped back to
filtration positions at the end.
"""

import logging
import time
from dataclasses import dataclass
from typing import Dict, List, Literal, Set, Tuple

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from .diagrams import PersistenceDiagram, PersistencePair
from .filtration import FaceIndex, Filtration

logger = logging.getLogger(__name__)

Reduction = Literal["dual", "twist"]
IndexPairs = List[Tuple[int, int]]


def compute_persistence(f: Filtration, reduction: Reduction = "dual") -> PersistenceDiagram:
    """All dimension-0 and dimension-1 pairs of the filtration, zero-persistence pairs included.

    Raises MalformedFiltration if the simplex order violates face-before-coface.
    """

    started = time.perf_counter()
    faces = f.face_index()

    if reduction == "twist":
        pairs, essential = _reduce_twist(faces)
    elif reduction == "dual":
        pairs, essential = _reduce_dual(faces)
    else:
        raise ValueError(f"Unknown reduction strategy: {reduction}")

    diagram = diagram_from_positions(f, pairs, essential)
    logger.debug(
        "Reduced %d simplices (%s) into %d pairs in %.3fs",
        len(f), reduction, len(diagram), time.perf_counter() - started,
    )
    return diagram


def diagram_from_positions(f: Filtration, pairs: IndexPairs, essential: List[int]) -> PersistenceDiagram:
    """Translate (birth position, death position) pairs into scale values."""

    values = f.values.tolist()
    dims = f.dims.tolist()
    # Values come from a validated filtration, so the pairs skip model validation.
    out = [
        PersistencePair.model_construct(dim=dims[b], birth=values[b], death=values[d])
        for b, d in pairs
        if dims[b] <= 1
    ]
    out.extend(PersistencePair.model_construct(dim=dims[b], birth=values[b], death=None) for b in essential if dims[b] <= 1)
    return PersistenceDiagram(eps_max=f.eps_max, pairs=out)


@dataclass(frozen=True, eq=False)
class Skeleton:
    """Facets of every edge and triangle as ranks within their own dimension."""

    n_vertices: int
    edge_vertices: np.ndarray
    triangle_edges: np.ndarray

    @classmethod
    def from_faces(cls, faces: FaceIndex) -> "Skeleton":
        return cls(
            n_vertices=int(faces.vertex_positions.size),
            edge_vertices=np.searchsorted(faces.vertex_positions, faces.edge_faces).reshape(-1, 2),
            triangle_edges=np.searchsorted(faces.edge_positions, faces.triangle_faces).reshape(-1, 3),
        )

    @property
    def n_edges(self) -> int:
        return int(self.edge_vertices.shape[0])

    @property
    def n_triangles(self) -> int:
        return int(self.triangle_edges.shape[0])

    def coface_table(self) -> np.ndarray:
        """Row e holds the ranks of the triangles containing edge e in increasing order,
        padded on the right with `n_triangles`."""

        flat = self.triangle_edges.reshape(-1)
        degree = np.bincount(flat, minlength=self.n_edges)
        width = int(degree.max()) if degree.size else 0
        table = np.full((self.n_edges, width), self.n_triangles, dtype=np.int64)
        if flat.size:
            # A stable sort keeps each edge's triangles in rank order; a narrow key dtype gets radix sort.
            order = np.argsort(flat.astype(np.min_scalar_type(self.n_edges)), kind="stable")
            rows = flat[order]
            starts = np.cumsum(degree) - degree
            table[rows, np.arange(flat.size) - starts[rows]] = order // 3
        return table

    def apparent_pairs(self, earliest: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """(edge, triangle) ranks of the pairs where each is the other's extreme neighbor.

        `earliest[e]` is the first coface of edge e (`n_triangles` if it has none).
        """

        if self.n_triangles == 0:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty
        latest = self.triangle_edges.max(axis=1)
        edges = np.flatnonzero(earliest < self.n_triangles)
        edges = edges[latest[earliest[edges]] == edges]
        return edges, earliest[edges]


def _reduce_twist(faces: FaceIndex) -> Tuple[IndexPairs, List[int]]:
    sk = Skeleton.from_faces(faces)
    table = sk.coface_table()
    earliest = table[:, 0] if table.shape[1] else np.full(sk.n_edges, sk.n_triangles)
    apparent_edges, apparent_triangles = sk.apparent_pairs(earliest)

    facets = sk.triangle_edges.tolist()
    # Bit i of a triangle column marks edge rank i; keyed by pivot edge.
    by_pivot: Dict[int, int] = {}
    edge_triangle: IndexPairs = []
    for e, t in zip(apparent_edges.tolist(), apparent_triangles.tolist()):
        a, b, c = facets[t]
        by_pivot[e] = (1 << a) | (1 << b) | (1 << c)
        edge_triangle.append((e, t))

    pending = np.ones(sk.n_triangles, dtype=bool)
    pending[apparent_triangles] = False
    for t in np.flatnonzero(pending).tolist():
        a, b, c = facets[t]
        column = (1 << a) | (1 << b) | (1 << c)
        low = column.bit_length() - 1
        while low in by_pivot:
            column ^= by_pivot[low]
            if not column:
                break
            low = column.bit_length() - 1
        if column:
            by_pivot[low] = column
            edge_triangle.append((low, t))

    # Edge columns over vertex ranks; pivot edges of triangle columns are cleared.
    vertex_pivot: Dict[int, int] = {}
    vertex_edge: IndexPairs = []
    negative: Set[int] = set()
    for e, (u, v) in enumerate(sk.edge_vertices.tolist()):
        if e in by_pivot:
            continue
        column = (1 << u) | (1 << v)
        low = column.bit_length() - 1
        while low in vertex_pivot:
            column ^= vertex_pivot[low]
            if not column:
                break
            low = column.bit_length() - 1
        if column:
            vertex_pivot[low] = column
            vertex_edge.append((low, e))
            negative.add(e)

    essential_vertices = [v for v in range(sk.n_vertices) if v not in vertex_pivot]
    essential_edges = [e for e in range(sk.n_edges) if e not in by_pivot and e not in negative]
    return _to_positions(faces, vertex_edge, edge_triangle, essential_vertices, essential_edges)


def _reduce_dual(faces: FaceIndex) -> Tuple[IndexPairs, List[int]]:
    sk = Skeleton.from_faces(faces)

    # Dimension 0: Kruskal over edges in filtration order. The younger of the two
    # merging components dies; its oldest vertex is the birth simplex.
    components = DisjointSet(range(sk.n_vertices))
    oldest = list(range(sk.n_vertices))
    negative = np.zeros(sk.n_edges, dtype=bool)
    vertex_edge: IndexPairs = []
    for e, (u, v) in enumerate(sk.edge_vertices.tolist()):
        ru, rv = components[u], components[v]
        if ru == rv:
            continue
        elder, younger = sorted((oldest[ru], oldest[rv]))
        components.merge(ru, rv)
        oldest[components[ru]] = elder
        vertex_edge.append((younger, e))
        negative[e] = True
    essential_vertices = sorted(oldest[root] for root in {components[v] for v in range(sk.n_vertices)})

    edge_triangle, essential_edges = _reduce_coboundaries(sk, negative)
    return _to_positions(faces, vertex_edge, edge_triangle, essential_vertices, essential_edges)


def _reduce_coboundaries(sk: Skeleton, negative: np.ndarray) -> Tuple[IndexPairs, List[int]]:
    """Dimension-1 pairs from the edge coboundaries, latest edge first.

    Edges that kill a component (`negative`) are cleared. A column that reduces
    to zero leaves its edge essential.
    """

    n_triangles = sk.n_triangles
    cofaces = sk.coface_table()
    earliest = cofaces[:, 0] if cofaces.shape[1] else np.full(sk.n_edges, n_triangles)
    earliest = np.where(negative, n_triangles, earliest)
    apparent_edges, apparent_triangles = sk.apparent_pairs(earliest)

    owner = np.full(n_triangles + 1, -1, dtype=np.int64)
    owner[apparent_triangles] = apparent_edges
    pending = ~negative
    pending[apparent_edges] = False

    edge_triangle: IndexPairs = list(zip(apparent_edges.tolist(), apparent_triangles.tolist()))
    essential: List[int] = []
    # Edges summed by each reduced coboundary that is not a single edge's.
    sums: Dict[int, np.ndarray] = {}
    column = np.zeros(n_triangles + 1, dtype=bool)

    for e in np.flatnonzero(pending)[::-1].tolist():
        column[cofaces[e]] = True
        touched = [cofaces[e]]
        terms = {e}
        low = int(earliest[e])
        while low < n_triangles and owner[low] >= 0:
            c = int(owner[low])
            summed = sums.get(c)
            if summed is None:
                rows = cofaces[c]
                terms ^= {c}
            else:
                rows = _odd_entries(cofaces[summed])
                terms.symmetric_difference_update(summed.tolist())
            column[rows] ^= True
            touched.append(rows)
            low = _first_set(column, low + 1, n_triangles)

        if low < n_triangles:
            owner[low] = e
            sums[e] = np.array(sorted(terms), dtype=np.int64)
            edge_triangle.append((e, low))
        else:
            essential.append(e)
        column[np.concatenate(touched)] = False

    logger.debug(
        "Coboundary reduction: %d apparent pairs, %d reduced columns",
        apparent_edges.size, len(sums) + len(essential),
    )
    return edge_triangle, essential


def _odd_entries(rows: np.ndarray) -> np.ndarray:
    """Entries occurring an odd number of times: the GF(2) sum of the rows."""
    values, counts = np.unique(rows, return_counts=True)
    return values[counts % 2 == 1]


def _first_set(column: np.ndarray, start: int, stop: int) -> int:
    """Index of the first True entry in column[start:stop], or `stop` if there is none."""
    if start >= stop:
        return stop
    offset = int(np.argmax(column[start:stop]))
    return start + offset if column[start + offset] else stop


def _to_positions(
    faces: FaceIndex,
    vertex_edge: IndexPairs,
    edge_triangle: IndexPairs,
    essential_vertices: List[int],
    essential_edges: List[int],
) -> Tuple[IndexPairs, List[int]]:
    vertices = faces.vertex_positions.tolist()
    edges = faces.edge_positions.tolist()
    triangles = faces.triangle_positions.tolist()
    pairs = [(vertices[v], edges[e]) for v, e in vertex_edge]
    pairs.extend((edges[e], triangles[t]) for e, t in edge_triangle)
    essential = [vertices[v] for v in essential_vertices] + [edges[e] for e in essential_edges]
    return pairs, essential
