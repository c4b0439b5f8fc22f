from hypothesis import given, settings, strategies as st

from conftest import complete, cycle, disjoint
from hypercolor.core import Multigraph
from hypercolor.dynamic import dynamic_bound, dynamic_color, neighborhood_hypergraph
from hypercolor.instance_gen import random_graph
from hypercolor.verify import (
    brute_force_min_dynamic_colors,
    verify_dynamic,
    verify_proper_hypergraph,
)


def star(leaves):
    return Multigraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def test_neighborhood_hypergraph_examples():
    nh = neighborhood_hypergraph(cycle(5))
    assert nh.hypergraph.hyperedges == tuple(
        tuple(sorted(((v - 1) % 5, (v + 1) % 5))) for v in range(5))
    nh = neighborhood_hypergraph(star(3))
    assert nh.hypergraph.hyperedges == ((1, 2, 3),) and nh.origin == (0,)
    assert neighborhood_hypergraph(Multigraph(4, [])).hypergraph.m == 0


def test_neighborhoods_ignore_multiplicity():
    g = Multigraph(3, [(0, 1), (0, 1), (0, 2)])
    assert neighborhood_hypergraph(g).hypergraph.hyperedges == ((1, 2),)


def test_c5():
    c = dynamic_color(cycle(5))
    assert verify_dynamic(cycle(5), c).ok and c.used() <= 3
    assert brute_force_min_dynamic_colors(cycle(5)) == 3


def test_c4_and_k4():
    for g, oracle in ((cycle(4), 2), (complete(4), 2)):
        c = dynamic_color(g)
        assert verify_dynamic(g, c).ok and c.used() <= 3
        assert brute_force_min_dynamic_colors(g) == oracle


def test_edgeless_and_pendants():
    c = dynamic_color(Multigraph(3, []))
    assert c.colors == (0, 0, 0)
    g = disjoint(star(3), Multigraph(1, []))
    c = dynamic_color(g)
    assert verify_dynamic(g, c).ok and c.colors[4] == 0


def test_k_route_used_when_allowed():
    g = complete(6)  # delta_eff = Delta = 5 -> k = 2, k+1 route
    assert dynamic_bound(g)[2:] == (2, False)
    g = random_graph(14, "1/2", 3)
    delta_eff, Delta, k, use_k = dynamic_bound(g)
    assert use_k and k == -(-2 * Delta // delta_eff)
    c = dynamic_color(g)
    assert c.palette == k and max(c.colors) < k and verify_dynamic(g, c).ok


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 14), st.sampled_from(["1/5", "1/3", "1/2", "2/3"]), st.integers(0, 2**64 - 1))
def test_dynamic_random(n, p, seed):
    g = random_graph(n, p, seed)
    _, _, k, use_k = dynamic_bound(g)
    c = dynamic_color(g)
    assert verify_dynamic(g, c).ok
    assert c.used() <= (k if use_k else k + 1) or k == 0


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 10), st.sampled_from(["1/4", "1/2", "3/4"]), st.integers(0, 2**64 - 1),
       st.data())
def test_checkers_agree(n, p, seed, data):
    g = random_graph(n, p, seed)
    cols = data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
    nh = neighborhood_hypergraph(g).hypergraph
    assert verify_dynamic(g, cols).ok == verify_proper_hypergraph(nh, cols).ok
