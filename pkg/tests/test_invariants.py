import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twoproper.exceptional import F5, F11, H, K2, generate
from twoproper.generators import complete, complete_bipartite, cycle, sharp_gt
from twoproper.graph import Graph, block_decomposition, component_masks, is_connected, iter_bits
from twoproper.invariants import (
    INF,
    alpha_star,
    format_ext,
    independence_number,
    independent_set_report,
    min_degree,
    pi2,
    sigma2,
    sigma_star,
    sigma_star_at_least,
    summarize,
)
from twoproper.oracle import independent_sets, oracle_alpha_star, oracle_sigma_star

from .strategies import graphs, permuted


def test_min_degree():
    assert min_degree(complete(4)) == 3
    assert min_degree(generate(H(2, 3))) == 2
    assert min_degree(sharp_gt((3, 4))) == 2
    with pytest.raises(ValueError):
        min_degree(Graph(0))


def test_sigma2_pi2_complete_is_infinite():
    assert sigma2(complete(5)) == INF and pi2(complete(5)) == INF
    assert sigma2(Graph(1)) == INF and sigma2(Graph(0)) == INF


def test_sigma2_pi2_small():
    assert (sigma2(cycle(4)), pi2(cycle(4))) == (4, 4)
    # pair (c1, s) with both degrees 2 is the minimum in H(2,3)
    h = generate(H(2, 3))
    assert h.degrees == (6, 4, 2, 2, 2, 3, 3)
    assert (sigma2(h), pi2(h)) == (4, 4)
    assert (sigma2(generate(F5())), pi2(generate(F5()))) == (4, 4)


def test_sigma_star_examples():
    assert sigma_star(complete(2)) == (INF, None)
    value, witness = sigma_star(sharp_gt((3, 4)))
    assert value == 7
    assert witness.vertices == frozenset({1, 4, 7}) and witness.is_large
    value, witness = sigma_star(generate(H(3, 4)))
    assert value == 9
    assert witness.vertices == frozenset({2, 4, 6})
    assert sigma_star(generate(F5()))[0] == INF


def test_sigma_star_at_least_examples():
    assert sigma_star_at_least(generate(F5()), 5) == (True, None)
    ok, witness = sigma_star_at_least(sharp_gt((3, 4)), 8)
    assert not ok and witness.weight == 7 and witness.is_large
    assert sigma_star_at_least(complete(6), 10**6)[0]


def test_alpha_star_examples():
    assert alpha_star(complete_bipartite(3, 3))[0] == 1
    assert independence_number(complete_bipartite(3, 3)) == 3
    for s, t in [(2, 2), (3, 4), (4, 5)]:
        for minus in (False, True):
            assert alpha_star(generate(H(s, t, minus)))[0] == 2
    a, witness = alpha_star(cycle(6))
    assert a == 2 and witness.is_light and len(witness.vertices) == 2
    with pytest.raises(ValueError):
        alpha_star(Graph(0))


def test_k1_degenerate_values():
    g = Graph(1)
    value, witness = sigma_star(g)
    assert value == 0 and witness.vertices == frozenset({0})
    assert alpha_star(g)[0] == 1


def test_independent_set_report_flags():
    g = cycle(6)
    rep = independent_set_report(g, {0, 2, 4})
    assert rep.weight == 6 and rep.min_degree == 2 and rep.is_large and not rep.is_light
    empty = independent_set_report(g, set())
    assert empty.min_degree == INF and not empty.is_large and empty.is_light
    with pytest.raises(ValueError):
        independent_set_report(g, {0, 1})


def test_summary_and_format():
    s = summarize(generate(F5()))
    assert (s.n, s.delta, s.sigma2, s.pi2, s.sigma_star, s.alpha_star) == (5, 2, 4, 4, INF, 2)
    assert format_ext(INF) == "inf" and format_ext(7) == "7"


def test_f11_values():
    g = generate(F11([]))
    assert sorted(g.degrees, reverse=True) == [8, 4, 4] + [3] * 8
    assert (sigma2(g), pi2(g)) == (6, 9)
    assert sigma_star(g)[0] == 12 and alpha_star(g)[0] == 3


# -- oracle agreement -----------------------------------------------------------


@given(graphs(min_n=1, max_n=11))
def test_sigma_star_matches_oracle(g):
    value, witness = sigma_star(g)
    assert value == oracle_sigma_star(g)
    if witness is not None:
        assert witness.is_large and witness.weight == value


@given(graphs(min_n=1, max_n=11))
def test_alpha_star_matches_oracle(g):
    a, witness = alpha_star(g)
    assert a == oracle_alpha_star(g)
    assert witness.is_light and len(witness.vertices) == a


@given(graphs(min_n=1, max_n=10), st.integers(0, 40))
def test_sigma_star_at_least_agrees(g, threshold):
    ok, witness = sigma_star_at_least(g, threshold)
    assert ok == (sigma_star(g)[0] >= threshold)
    if not ok:
        assert witness.is_large and witness.weight < threshold


@given(graphs(min_n=1, max_n=10))
def test_alpha_star_at_most_alpha(g):
    a = alpha_star(g)[0]
    assert 1 <= a <= independence_number(g)
    best = max(bin(s).count("1") for s in independent_sets(g))
    assert independence_number(g) == best


@given(permuted(graphs(min_n=1, max_n=9)))
def test_invariants_relabeling_invariant(case):
    g, perm = case
    h = g.relabel(perm)
    a, b = summarize(g), summarize(h)
    assert (a.delta, a.sigma2, a.pi2, a.sigma_star, a.alpha_star, a.alpha) == (
        b.delta, b.sigma2, b.pi2, b.sigma_star, b.alpha_star, b.alpha
    )


@given(graphs(min_n=1, max_n=9), st.data())
def test_large_set_stays_large_when_extended(g, data):
    for mask in independent_sets(g):
        rep = independent_set_report(g, iter_bits(mask))
        if not rep.is_large:
            continue
        free = [v for v in range(g.n) if not (mask >> v) & 1 and not g.adj[v] & mask and g.degree(v) >= rep.min_degree]
        if free:
            v = data.draw(st.sampled_from(free))
            assert independent_set_report(g, rep.vertices | {v}).is_large
        return


# -- degree-sum bounds ----------------------------------------------------


@given(graphs(min_n=2, max_n=10))
def test_degree_sum_chain(g):
    n, d = g.n, min_degree(g)
    s2, p2 = sigma2(g), pi2(g)
    if d >= 1 and (s2 == INF or d * s2 >= n + d * d - d):
        assert p2 >= n - d
    if p2 >= n - d:
        assert sigma_star(g)[0] >= n


def test_k1_breaks_pi2_chain():
    # pi2 is +inf for K1, yet its only vertex forms a large set of weight 0
    g = Graph(1)
    assert pi2(g) == INF and sigma_star(g)[0] == 0 < 1


@given(graphs(min_n=2, max_n=10))
def test_light_sets_bounded_by_sigma2(g):
    if g.is_complete() or min_degree(g) < 1:
        return
    assert alpha_star(g)[0] * sigma2(g) <= 2 * (g.n - 1)


@given(graphs(min_n=1, max_n=10))
def test_component_bounds(g):
    pieces = [g.induced(iter_bits(c))[0] for c in component_masks(g)]
    assert sigma_star(g)[0] <= min(sigma_star(p)[0] for p in pieces)
    assert alpha_star(g)[0] >= sum(alpha_star(p)[0] for p in pieces)


@given(graphs(min_n=3, max_n=10))
def test_cut_vertex_gives_alpha_star_two(g):
    if is_connected(g) and block_decomposition(g).cut_vertices:
        assert alpha_star(g)[0] >= 2


def test_inf_is_float_inf():
    assert INF == math.inf and INF > 10**9
