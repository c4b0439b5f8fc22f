"""Dynamic graph colorings through the neighbourhood hypergraph.

A coloring is dynamic when every vertex of degree >= 2 sees two colors among
its neighbours, i.e. when it properly colors the hypergraph whose hyperedges
are those neighbourhoods.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import Coloring, Hypergraph, Multigraph, compute_k
from .theorem_one import UseKPlusOne, color_k, color_k_plus_1


@dataclass(frozen=True)
class NeighborhoodHypergraph:
    hypergraph: Hypergraph
    origin: tuple[int, ...]  # hyperedge index -> vertex whose neighbourhood it is


def _simple_neighbors(g: Multigraph) -> list[set[int]]:
    return [g.neighbors(v) for v in range(g.n)]


def neighborhood_hypergraph(g: Multigraph) -> NeighborhoodHypergraph:
    nbrs = _simple_neighbors(g)
    origin = tuple(v for v in range(g.n) if len(nbrs[v]) >= 2)
    return NeighborhoodHypergraph(Hypergraph(g.n, [nbrs[v] for v in origin]), origin)


def dynamic_bound(g: Multigraph) -> tuple[int | None, int, int, bool]:
    """Return ``(delta_eff, Delta, k, use_k)`` for graph ``g``.

    ``delta_eff`` is the least degree among vertices of degree >= 2 (None if
    there are none); ``use_k`` says whether the ``k``-color guarantee applies.
    """
    deg = [len(s) for s in _simple_neighbors(g)]
    big = [d for d in deg if d >= 2]
    if not big:
        return None, max(deg, default=0), 0, False
    p = compute_k(max(deg), min(big))
    return p.delta, p.Delta, p.k, p.delta >= 3 and p.k >= 3


def dynamic_color(g: Multigraph, counters: Counter | None = None) -> Coloring:
    """Dynamic coloring with at most ``k`` (or ``k + 1``) colors.

    The returned palette is the guaranteed bound for ``g``.
    """
    _, _, k, use_k = dynamic_bound(g)
    nh = neighborhood_hypergraph(g).hypergraph
    if use_k:
        try:
            c = color_k(nh, counters=counters)
        except UseKPlusOne:
            # the neighbourhood hypergraph's own k is below 3, so k_H + 1 <= k
            c = color_k_plus_1(nh, counters=counters)
        return Coloring(c.colors, k)
    c = color_k_plus_1(nh, counters=counters)
    return Coloring(c.colors, max(k + 1, c.palette))
