"""Tests for persistence pairs: both reductions, the brute-force oracle and homology invariants."""
import math
import time
from collections import Counter

import numpy as np
import pytest
from conftest import random_cloud

from topology.diagrams import persistent_betti
from topology.embedding import PointCloud
from topology.filtration import Filtration, build_rips
from topology.homology import Skeleton, compute_persistence
from topology.oracle import naive_persistence_oracle, rank_profile
from utils.errors import MalformedFiltration, TooLargeForOracle

INF = math.inf
SQRT2 = math.sqrt(2.0)
UNIT_SQUARE = PointCloud(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
ORACLE_BUDGET = 60.0
REDUCTION_BUDGET = 15.0


@pytest.fixture(params=["dual", "twist"])
def reduction(request):
    return request.param


def test_two_points(reduction):
    f = build_rips(PointCloud(np.array([[0.0], [3.0]])), eps_max=5.0, temporal_links=False)
    d = compute_persistence(f, reduction)
    assert d.as_tuples() == [(0, 0.0, 3.0), (0, 0.0, INF)]
    assert d.eps_max == 5.0


def test_unit_square(reduction):
    d = compute_persistence(build_rips(UNIT_SQUARE, eps_max=2.0, temporal_links=False), reduction)
    assert d.without_zero_persistence().restrict(1).as_tuples() == [(1, 1.0, SQRT2)]
    assert d.restrict(0).as_tuples() == [(0, 0.0, 1.0)] * 3 + [(0, 0.0, INF)]
    # The two diagonals open loops that their triangles close at once.
    assert d.restrict(1).as_tuples() == [(1, 1.0, SQRT2), (1, SQRT2, SQRT2), (1, SQRT2, SQRT2)]


def test_equilateral_triangle(reduction):
    s = 0.75
    f = Filtration.from_simplices([
        ((0,), 0.0), ((1,), 0.0), ((2,), 0.0),
        ((0, 1), s), ((0, 2), s), ((1, 2), s),
        ((0, 1, 2), s),
    ])
    d = compute_persistence(f, reduction)
    assert d.restrict(0).as_tuples() == [(0, 0.0, s), (0, 0.0, s), (0, 0.0, INF)]
    assert d.restrict(1).as_tuples() == [(1, s, s)]
    assert len(d.without_zero_persistence().restrict(1)) == 0


def test_oracle_vertices_only():
    f = Filtration.from_simplices([((0,), 0.0), ((1,), 0.0), ((2,), 0.0)])
    assert naive_persistence_oracle(f).as_tuples() == [(0, 0.0, INF)] * 3


def test_oracle_unit_square():
    d = naive_persistence_oracle(build_rips(UNIT_SQUARE, eps_max=2.0, temporal_links=False))
    assert d.without_zero_persistence().restrict(1).as_tuples() == [(1, 1.0, SQRT2)]


def test_oracle_limit():
    cloud = PointCloud(np.arange(17.0).reshape(17, 1))
    with pytest.raises(TooLargeForOracle):
        naive_persistence_oracle(build_rips(cloud, eps_max=1.0))


def test_rank_profile():
    assert rank_profile([0b011, 0b110, 0b101, 0b001]).tolist() == [0, 1, 2, 2, 3]


def test_reductions_match_oracle():
    """Both reductions agree with the brute-force pairing on random small clouds."""
    rng = np.random.default_rng(7)
    started = time.perf_counter()
    checked = 0
    for _ in range(36):
        cloud = random_cloud(rng, int(rng.integers(2, 13)), int(rng.integers(1, 4)))
        full = build_rips(cloud, temporal_links=False).eps_max
        for temporal_links in (False, True):
            for fraction in (1.0, 0.6, 0.3):
                f = build_rips(cloud, eps_max=fraction * full, temporal_links=temporal_links)
                expected = naive_persistence_oracle(f).as_tuples()
                assert compute_persistence(f, "dual").as_tuples() == expected
                assert compute_persistence(f, "twist").as_tuples() == expected
                checked += 1
    assert checked >= 200
    assert time.perf_counter() - started < ORACLE_BUDGET


def test_reductions_match_on_ties():
    """Integer lattice points produce many equal filtration values."""
    rng = np.random.default_rng(11)
    for _ in range(30):
        cloud = PointCloud(rng.integers(0, 3, size=(int(rng.integers(3, 11)), 2)).astype(float))
        f = build_rips(cloud, eps_max=2.0, temporal_links=bool(rng.integers(0, 2)))
        expected = naive_persistence_oracle(f).as_tuples()
        assert compute_persistence(f, "dual").as_tuples() == expected
        assert compute_persistence(f, "twist").as_tuples() == expected


@pytest.mark.parametrize("seed", range(5))
def test_reductions_agree_on_linked_clouds(seed):
    rng = np.random.default_rng(seed)
    cloud = random_cloud(rng, 40, 3)
    f = build_rips(cloud, eps_max=0.7 * build_rips(cloud).eps_max)
    assert compute_persistence(f, "dual").as_tuples() == compute_persistence(f, "twist").as_tuples()


def test_apparent_pairs_are_persistence_pairs(rng):
    f = build_rips(random_cloud(rng, 40, 3))
    sk = Skeleton.from_faces(f.face_index())
    edges, triangles = sk.apparent_pairs(sk.coface_table()[:, 0])
    assert edges.size
    edge_values = f.values[f.dims == 1]
    triangle_values = f.values[f.dims == 2]
    # Each edge is the latest facet of its triangle and that triangle is its earliest coface.
    assert np.all(sk.triangle_edges[triangles].max(axis=1) == edges)
    apparent = Counter(zip(edge_values[edges].tolist(), triangle_values[triangles].tolist()))
    finite = Counter((p.birth, p.death) for p in compute_persistence(f).pairs if p.dim == 1 and not p.is_essential)
    assert not apparent - finite


def test_coface_table_rows(rng):
    sk = Skeleton.from_faces(build_rips(random_cloud(rng, 12, 2), eps_max=0.9).face_index())
    table = sk.coface_table()
    for e in range(sk.n_edges):
        expected = np.flatnonzero((sk.triangle_edges == e).any(axis=1))
        row = table[e]
        np.testing.assert_array_equal(row[row < sk.n_triangles], expected)


@pytest.mark.slow
def test_full_size_linked_cloud_within_budget(rng):
    f = build_rips(random_cloud(rng, 150, 3))
    started = time.perf_counter()
    d = compute_persistence(f)
    assert time.perf_counter() - started < REDUCTION_BUDGET
    assert sum(1 for p in d.pairs if p.dim == 0 and p.is_essential) == 1


@pytest.mark.parametrize("temporal_links", [False, True])
def test_euler_characteristic(rng, temporal_links, reduction):
    for _ in range(10):
        f = build_rips(random_cloud(rng, int(rng.integers(3, 25)), 3), eps_max=0.8, temporal_links=temporal_links)
        d = compute_persistence(f, reduction)
        beta0 = sum(1 for p in d.pairs if p.dim == 0 and p.is_essential)
        beta1 = sum(1 for p in d.pairs if p.dim == 1 and p.is_essential)
        killers = sum(1 for p in d.pairs if p.dim == 1 and not p.is_essential)
        beta2 = f.count(2) - killers
        assert f.count(0) - f.count(1) + f.count(2) == beta0 - beta1 + beta2


def test_h0_births_are_zero(rng, reduction):
    d = compute_persistence(build_rips(random_cloud(rng, 20, 2), eps_max=0.5, temporal_links=False), reduction)
    assert all(p.birth == 0.0 for p in d.pairs if p.dim == 0)


def test_temporal_links_leave_one_component(rng, reduction):
    d = compute_persistence(build_rips(random_cloud(rng, 30, 3), eps_max=0.4, temporal_links=True), reduction)
    h0 = d.restrict(0)
    assert sum(1 for p in h0.pairs if p.is_essential) == 1
    assert all(p.death == 0.0 for p in h0.pairs if not p.is_essential)
    assert persistent_betti(d, 0, 0.01) == 1


def test_zero_persistence_pairs_never_counted(rng):
    d = compute_persistence(build_rips(random_cloud(rng, 15, 2), temporal_links=True))
    trimmed = d.without_zero_persistence()
    for threshold in (1e-9, 0.05, 0.3, 1.0):
        for dim in (0, 1):
            assert persistent_betti(d, dim, threshold) == persistent_betti(trimmed, dim, threshold)


def test_malformed_filtration_rejected(reduction):
    f = Filtration(
        values=np.array([0.0, 0.0, 1.0]),
        dims=np.array([0, 0, 1], dtype=np.int8),
        vertices=np.array([[0, -1, -1], [1, -1, -1], [0, 2, -1]]),
        eps_max=1.0,
        n_vertices=3,
    )
    with pytest.raises(MalformedFiltration):
        compute_persistence(f, reduction)


def test_unknown_reduction():
    f = Filtration.from_simplices([((0,), 0.0)])
    with pytest.raises(ValueError):
        compute_persistence(f, "column")
