"""Greedy and Brooks-type colorings of simple graphs.

Brooks' theorem: a connected graph of maximum degree ``k >= 3`` that is not
``K_{k+1}`` is ``k``-colorable.  The construction used here is the classical
one:

(a) some vertex ``r`` has degree ``< k``: color in reverse BFS order from
    ``r`` -- every vertex except ``r`` still has its BFS parent uncolored;
(b) ``k``-regular with a cut vertex ``c``: every piece hanging off ``c`` has
    ``c`` as a deficient vertex, so color each by (a) and permute colors so
    they agree at ``c``;
(c) ``k``-regular and 2-connected: pick ``x`` with non-adjacent neighbours
    ``y, z`` such that ``G - {y, z}`` stays connected, give ``y`` and ``z``
    the same color, then do (a) from ``x`` in ``G - {y, z}``.  ``x`` is
    colored last and sees at most ``k - 1`` distinct colors.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import Coloring, HypercolorError, InvariantViolation, Multigraph


class PaletteExhausted(HypercolorError):
    pass


class BrooksPrecondition(HypercolorError):
    pass


class CliqueComponent(BrooksPrecondition):
    def __init__(self, components: list[tuple[int, ...]]):
        super().__init__(f"K_(k+1) components present: {components}")
        self.components = components


@dataclass(frozen=True)
class SimpleProjection:
    n: int
    adj: tuple[frozenset[int], ...]
    multiplicity: dict[tuple[int, int], int]

    @classmethod
    def from_multigraph(cls, g: Multigraph) -> SimpleProjection:
        return cls.from_edges(g.n, g.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleProjection:
        adj: list[set[int]] = [set() for _ in range(n)]
        mult: dict[tuple[int, int], int] = {}
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u].add(v)
            adj[v].add(u)
            key = (min(u, v), max(u, v))
            mult[key] = mult.get(key, 0) + 1
        return cls(n, tuple(frozenset(a) for a in adj), mult)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edge_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.multiplicity)

    def components(self, vertices: Iterable[int] | None = None) -> list[tuple[int, ...]]:
        """Connected components of the subgraph induced on ``vertices``."""
        allowed = set(range(self.n)) if vertices is None else set(vertices)
        return _components(self.adj, allowed)


def _components(adj, allowed: set[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def _greedy_into(adj, order: Iterable[int], palette: int, colors: dict[int, int],
                 max_seen: int | None = None) -> None:
    for v in order:
        done = [u for u in adj[v] if u in colors]
        if max_seen is not None and len(done) > max_seen:
            raise InvariantViolation(f"vertex {v} has {len(done)} colored neighbours at its turn")
        taken = {colors[u] for u in done}
        c = next((c for c in range(palette) if c not in taken), None)
        if c is None:
            raise PaletteExhausted(f"vertex {v}: all {palette} colors used by neighbours")
        colors[v] = c


def greedy_coloring(g: SimpleProjection, order: Sequence[int], palette: int) -> Coloring:
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    colors: dict[int, int] = {}
    _greedy_into(g.adj, order, palette, colors)
    return Coloring([colors[v] for v in range(g.n)], palette)


def find_clique_components(g: SimpleProjection, k: int) -> list[tuple[int, ...]]:
    out = []
    for comp in g.components():
        if len(comp) == k + 1 and all(g.degree(v) == k for v in comp):
            out.append(comp)
    return out


def _bfs_order(adj, root: int, allowed: set[int]) -> list[int]:
    order = [root]
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y in allowed and y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def _is_connected(adj, vertices: set[int]) -> bool:
    if not vertices:
        return True
    return len(_bfs_order(adj, min(vertices), vertices)) == len(vertices)


def _cut_vertices(adj, vertices: set[int]) -> list[int]:
    """Articulation points of the (connected) induced subgraph, via lowpoints."""
    root = min(vertices)
    disc = {root: 0}
    low = {root: 0}
    cuts = set()
    root_children = 0
    stack = [(root, -1, iter(sorted(adj[root] & vertices)))]
    while stack:
        x, parent, it = stack[-1]
        for y in it:
            if y == parent:
                continue
            if y in disc:
                low[x] = min(low[x], disc[y])
            else:
                disc[y] = low[y] = len(disc)
                stack.append((y, x, iter(sorted(adj[y] & vertices))))
                break
        else:
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[x])
            if parent == root:
                root_children += 1
            elif low[x] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(root)
    return sorted(cuts)


def _color_deficient(adj, vertices: set[int], root: int, k: int) -> dict[int, int]:
    colors: dict[int, int] = {}
    order = _bfs_order(adj, root, vertices)
    _greedy_into(adj, reversed(order), k, colors)
    return colors


def brooks_component_coloring(g: SimpleProjection, k: int,
                              vertices: Iterable[int] | None = None) -> dict[int, int]:
    """Color one connected component with at most ``k`` colors.

    ``vertices`` selects the component inside ``g`` (default: all of ``g``).
    Returns a mapping vertex -> color for the component's vertices only.
    """
    if k < 3:
        raise BrooksPrecondition(f"k must be at least 3, got {k}")
    vs = set(range(g.n)) if vertices is None else set(vertices)
    if not vs:
        return {}
    adj = {v: g.adj[v] & vs for v in vs}
    if any(len(adj[v]) > k for v in vs):
        raise BrooksPrecondition(f"maximum degree exceeds {k}")
    if not _is_connected(adj, vs):
        raise BrooksPrecondition("component is not connected")
    if len(vs) == k + 1 and all(len(adj[v]) == k for v in vs):
        raise BrooksPrecondition(f"component is K_{k + 1}")

    low = [v for v in sorted(vs) if len(adj[v]) < k]
    if low:
        return _color_deficient(adj, vs, low[0], k)

    cuts = _cut_vertices(adj, vs)
    if cuts:
        c = cuts[0]
        colors = {c: 0}
        for piece in _components(adj, vs - {c}):
            part = set(piece) | {c}
            sub = _color_deficient(adj, part, c, k)
            # rename so that c gets color 0 in every piece
            swap = {sub[c]: 0, 0: sub[c]}
            for v in piece:
                colors[v] = swap.get(sub[v], sub[v])
        return colors

    for x in sorted(vs):
        for y, z in combinations(sorted(adj[x]), 2):
            if z in adj[y]:
                continue
            rest = vs - {y, z}
            if not _is_connected(adj, rest):
                continue
            colors = {y: 0, z: 0}
            order = _bfs_order(adj, x, rest)
            _greedy_into(adj, reversed(order), k, colors)
            return colors
    raise InvariantViolation("2-connected regular component without a Brooks triple")


def brooks_coloring(g: SimpleProjection, k: int) -> Coloring:
    if k < 3:
        raise BrooksPrecondition(f"k must be at least 3, got {k}")
    if g.max_degree() > k:
        raise BrooksPrecondition(f"maximum degree {g.max_degree()} exceeds {k}")
    cliques = find_clique_components(g, k)
    if cliques:
        raise CliqueComponent(cliques)
    colors: dict[int, int] = {}
    for comp in g.components():
        colors.update(brooks_component_coloring(g, k, comp))
    return Coloring([colors[v] for v in range(g.n)], k)
