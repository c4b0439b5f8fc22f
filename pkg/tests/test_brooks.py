import pytest
from hypothesis import given, settings, strategies as st

from conftest import complete, cycle, disjoint, path, petersen
from hypercolor.brooks import (
    BrooksPrecondition,
    CliqueComponent,
    PaletteExhausted,
    SimpleProjection,
    _cut_vertices,
    brooks_coloring,
    brooks_component_coloring,
    find_clique_components,
    greedy_coloring,
)
from hypercolor.core import Hypergraph, Multigraph
from hypercolor.verify import brute_force_min_colors, verify_proper_graph


def sp(g):
    return SimpleProjection.from_multigraph(g)


def test_projection_collapses_parallel_edges():
    s = SimpleProjection.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert s.degree(1) == 2
    assert s.multiplicity == {(0, 1): 2, (1, 2): 1}


def test_greedy_examples():
    assert greedy_coloring(sp(path(3)), [0, 1, 2], 2).colors == (0, 1, 0)
    assert sorted(greedy_coloring(sp(complete(3)), [2, 0, 1], 3).colors) == [0, 1, 2]
    with pytest.raises(PaletteExhausted):
        greedy_coloring(sp(complete(3)), [0, 1, 2], 2)


def test_find_clique_components():
    assert find_clique_components(sp(disjoint(complete(4), path(3))), 3) == [(0, 1, 2, 3)]
    assert find_clique_components(sp(cycle(5)), 3) == []
    assert len(find_clique_components(sp(disjoint(complete(4), complete(4))), 3)) == 2


def test_petersen_three_colors():
    g = petersen()
    colors = brooks_component_coloring(sp(g), 3)
    assert max(colors.values()) < 3
    assert verify_proper_graph(g, [colors[v] for v in range(10)]).ok
    # oracle: chromatic number of the Petersen graph
    assert brute_force_min_colors(Hypergraph(10, g.edges)) == 3


def test_component_rejects_clique_and_overload():
    with pytest.raises(BrooksPrecondition):
        brooks_component_coloring(sp(complete(4)), 3)
    with pytest.raises(BrooksPrecondition):
        brooks_component_coloring(sp(complete(5)), 3)
    with pytest.raises(BrooksPrecondition):
        brooks_component_coloring(sp(disjoint(path(2), path(2))), 3)


def test_c6_greedy_branch():
    colors = brooks_component_coloring(sp(cycle(6)), 3)
    assert max(colors.values()) < 3
    assert verify_proper_graph(cycle(6), [colors[v] for v in range(6)]).ok


def test_brooks_coloring_examples():
    g = disjoint(cycle(5), path(2))
    c = brooks_coloring(sp(g), 3)
    assert verify_proper_graph(g, c).ok and max(c.colors) < 3
    with pytest.raises(CliqueComponent) as info:
        brooks_coloring(sp(disjoint(complete(4), cycle(5))), 3)
    assert info.value.components == [(0, 1, 2, 3)]
    assert brooks_coloring(sp(Multigraph(5, [])), 3).colors == (0,) * 5


def two_k4_minus_edge_joined():
    # two copies of K4 minus an edge joined by two disjoint edges: cubic, 2-connected
    a = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    b = [(u + 4, v + 4) for u, v in a]
    return Multigraph(8, a + b + [(0, 4), (3, 7)])


def test_regular_two_connected_branch():
    g = two_k4_minus_edge_joined()
    s = sp(g)
    assert all(s.degree(v) == 3 for v in range(8))
    assert _cut_vertices(s.adj, set(range(8))) == []
    colors = brooks_component_coloring(s, 3)
    assert verify_proper_graph(g, [colors[v] for v in range(8)]).ok
    assert max(colors.values()) < 3


def test_regular_cut_vertex_branch():
    # 4-regular: two K5-minus-an-edge blocks glued at vertex 0
    edges = []
    for o in (1, 6):
        blk = range(o, o + 5)
        edges += [(x, y) for x in blk for y in blk if x < y and (x, y) != (o, o + 1)]
        edges += [(0, o), (0, o + 1)]
    g = Multigraph(11, edges)
    s = sp(g)
    assert all(s.degree(v) == 4 for v in range(11))
    assert _cut_vertices(s.adj, set(range(11))) == [0]
    colors = brooks_component_coloring(s, 4)
    assert verify_proper_graph(g, [colors[v] for v in range(11)]).ok
    assert max(colors.values()) < 4


def test_cubic_bridge_branch():
    # K4 with edge (1,2) subdivided by vertex 4, twice, the two 4s bridged
    half = [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3), (1, 4), (2, 4)]
    g = Multigraph(10, half + [(u + 5, v + 5) for u, v in half] + [(4, 9)])
    s = sp(g)
    assert all(s.degree(v) == 3 for v in range(10))
    assert _cut_vertices(s.adj, set(range(10))) == [4, 9]
    colors = brooks_component_coloring(s, 3)
    assert verify_proper_graph(g, [colors[v] for v in range(10)]).ok
    assert max(colors.values()) < 3


def test_cut_vertices_matches_bruteforce():
    for g in (path(5), cycle(6), petersen(), disjoint(complete(3), Multigraph(0))):
        s = sp(g)
        vs = set(range(g.n))
        expected = [v for v in sorted(vs)
                    if len(s.components(vs - {v})) > len(s.components(vs))]
        assert _cut_vertices(s.adj, vs) == expected


@st.composite
def bounded_connected_graph(draw):
    k = draw(st.integers(3, 5))
    n = draw(st.integers(1, 12))
    order = list(range(n))
    deg = [0] * n
    edges = set()
    for v in range(1, n):  # spanning tree keeps it connected
        choices = [u for u in range(v) if deg[u] < k]
        u = draw(st.sampled_from(choices)) if choices else None
        if u is None:
            break
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    for u, v in extra:
        if u != v and (min(u, v), max(u, v)) not in edges and deg[u] < k and deg[v] < k:
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
    return Multigraph(n, sorted(edges)), k


@settings(max_examples=300, deadline=None)
@given(bounded_connected_graph())
def test_brooks_random_connected(gk):
    g, k = gk
    s = sp(g)
    if len(s.components()) != 1 or find_clique_components(s, k):
        return
    colors = brooks_component_coloring(s, k)
    assert colors == brooks_component_coloring(s, k)
    assert max(colors.values()) < k
    assert verify_proper_graph(g, [colors[v] for v in range(g.n)]).ok
