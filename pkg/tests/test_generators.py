from itertools import combinations

import numpy as np
import pytest

from twoproper.generators import (
    check_sharpness_spec,
    complete,
    complete_bipartite,
    cycle,
    labeled_graphs,
    path,
    random_graph,
    random_graphs,
    sharp_gt,
    sharp_gt_prime,
)
from twoproper.graph import is_connected
from twoproper.invariants import INF, alpha_star, independence_number, min_degree, sigma2, sigma_star
from twoproper.oracle import independent_sets, oracle_min_2pp
from twoproper.partition import Partitioned, PreconditionFailed, construct_2pp, verify_partition


def test_sharp_gt_layout():
    g = sharp_gt((3, 4))
    assert g.n == 8
    assert sorted(g.neighbors(7)) == [0, 3]
    assert min_degree(g) == 2 and is_connected(g)


def test_sharp_gt_values():
    g = sharp_gt((3, 4))
    assert sigma_star(g)[0] == 7
    assert oracle_min_2pp(g) is None
    assert sigma_star(sharp_gt((4, 4, 4)))[0] == 12


@pytest.mark.parametrize("t", [(3, 4), (3, 3), (4, 5), (4, 4, 4), (4, 4, 5)])
def test_every_large_set_of_gt_has_weight_n_minus_1(t):
    g = sharp_gt(t)
    deg = g.degrees
    for mask in independent_sets(g):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if vs and len(vs) >= min(deg[v] for v in vs) + 1:
            assert sum(deg[v] for v in vs) == g.n - 1


@pytest.mark.parametrize("t", [(3, 4), (3, 3), (4, 4, 4), (4, 5, 6)])
def test_gt_prime_has_no_large_set(t):
    g = sharp_gt_prime(t)
    assert sigma_star(g)[0] == INF
    assert independence_number(g) == len(t)
    assert alpha_star(g)[0] <= len(t)


def test_gt_prime_partitions():
    g = sharp_gt_prime((3, 4))
    assert oracle_min_2pp(g)[0] == 2
    res = construct_2pp(g)
    assert isinstance(res, Partitioned) and len(res.partition) == 2
    assert oracle_min_2pp(sharp_gt_prime((4, 4, 4)), max_n=13)[0] == 3


@pytest.mark.parametrize("t", [(3, 4), (4, 4, 4), (4, 5), (4, 4, 5)])
def test_construct_on_sharpness_graphs(t):
    assert isinstance(construct_2pp(sharp_gt(t)), PreconditionFailed)
    res = construct_2pp(sharp_gt_prime(t))
    assert isinstance(res, Partitioned)
    assert len(res.partition) == len(t) <= res.parts_bound
    assert verify_partition(sharp_gt_prime(t), res.partition)


def test_sharpness_spec_validation():
    with pytest.raises(ValueError, match="d\\+1"):
        check_sharpness_spec((2, 4))
    with pytest.raises(ValueError, match="less than n"):
        check_sharpness_spec((3, 3), strict=True)
    with pytest.raises(ValueError, match="less than n"):
        sharp_gt((4, 4, 4), strict=True)
    with pytest.raises(ValueError):
        check_sharpness_spec(())
    check_sharpness_spec((3, 3))
    check_sharpness_spec((3, 4), strict=True)


def test_named_graphs():
    assert sigma2(complete(5)) == INF
    assert alpha_star(complete_bipartite(3, 3))[0] == 1
    assert cycle(6).num_edges == 6 and path(4).num_edges == 3
    with pytest.raises(ValueError):
        cycle(2)


def test_random_graph_is_deterministic():
    assert random_graph(10, 0.5, seed=1) == random_graph(10, 0.5, seed=1)
    assert random_graph(10, 0.5, seed=1) != random_graph(10, 0.5, seed=2)
    assert random_graph(6, 0.0, seed=3).num_edges == 0
    assert random_graph(6, 1.0, seed=3) == complete(6)
    with pytest.raises(ValueError):
        random_graph(5, 1.5, seed=0)


def test_random_graph_matches_raw_stream():
    # one PCG64 draw per pair in lexicographic order, edge when draw < p
    draws = np.random.default_rng(7).random(10)
    pairs = list(combinations(range(5), 2))
    expected = [e for e, x in zip(pairs, draws) if x < 0.5]
    assert random_graph(5, 0.5, seed=7).edges() == expected
    assert expected == [(0, 4), (1, 2), (1, 4), (3, 4)]


def test_random_ensemble():
    batch = list(random_graphs(50, [4, 8], [0.2, 0.8], seed=5))
    assert batch == list(random_graphs(50, [4, 8], [0.2, 0.8], seed=5))
    assert {g.n for g in batch} == {4, 8}


def test_labeled_graph_count():
    assert sum(1 for _ in labeled_graphs(4)) == 64
    assert len(set(labeled_graphs(4))) == 64
