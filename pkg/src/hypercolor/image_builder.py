"""Bounded-degree images of hypergraphs.

Start from any image and, while some vertex has degree above ``k``, find an
alternating chain from the overloaded vertices to a vertex of degree below
``k`` and rotate every edge along it one step forward.  Each rotation moves a
unit of degree from the chain's first vertex to its last one, so the sum of
degrees over overloaded vertices strictly drops and the loop terminates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .core import (
    Hypergraph,
    Image,
    InvariantViolation,
    HypercolorError,
    Multigraph,
    Parameters,
    parameters,
)


class NotReached(HypercolorError):
    pass


class InvalidRotation(InvariantViolation):
    pass


class LemmaViolation(InvariantViolation):
    """No low-degree vertex is reachable; impossible for a valid hypergraph."""


@dataclass
class ChainForest:
    """All ends of alternating chains that start in ``sources``.

    ``parent[x] = (a, b, edge_id)``: the last step of the recorded chain to
    ``x`` went along edge ``(a, b)`` and then jumped to ``x`` inside that
    edge's hyperedge.
    """

    sources: frozenset[int]
    dist: dict[int, int]
    parent: dict[int, tuple[int, int, int]]

    @property
    def reached(self) -> set[int]:
        return set(self.dist)


@dataclass(frozen=True)
class Chain:
    """``a_0 b_0 a_1 b_1 ... a_n`` with ``edges[i]`` joining ``a_i`` and ``b_i``."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def start(self) -> int:
        return self.a[0]

    @property
    def end(self) -> int:
        return self.a[-1]

    def sequence(self) -> list[int]:
        out = []
        for i, e in enumerate(self.edges):
            out += [self.a[i], self.b[i]]
        out.append(self.a[-1])
        return out


def initial_image(h: Hypergraph, strategy: str = "balanced") -> Image:
    """One edge per hyperedge.

    ``balanced`` joins the two members of lowest degree so far (ties by id);
    ``first`` joins the two smallest members, which tends to need rotations.
    """
    if strategy not in ("balanced", "first"):
        raise ValueError(f"unknown strategy {strategy!r}")
    deg = [0] * h.n
    pairs = []
    for e in h.hyperedges:
        if strategy == "first":
            u, v = e[0], e[1]
        else:
            u, v = sorted(sorted(e, key=lambda x: (deg[x], x))[:2])
        deg[u] += 1
        deg[v] += 1
        pairs.append((u, v))
    return Image(Multigraph(h.n, pairs), tuple(range(h.m)), h)


def alternating_bfs(img: Image, sources: Iterable[int]) -> ChainForest:
    return _bfs(img.graph.n, img.graph.edges, img.graph.incidence,
                img.hypergraph.hyperedges, img.phi, sources)


def _bfs(n, ends, incidence, hyperedges, phi, sources) -> ChainForest:
    src = frozenset(sources)
    dist = {s: 0 for s in src}
    parent: dict[int, tuple[int, int, int]] = {}
    layer = sorted(src)
    d = 0
    while layer:
        nxt = []
        for a in layer:
            for e in sorted(incidence[a]):
                x, y = ends[e]
                b = y if x == a else x
                for c in hyperedges[phi[e]]:
                    if c != a and c != b and c not in dist:
                        dist[c] = d + 1
                        parent[c] = (a, b, e)
                        nxt.append(c)
        layer = sorted(nxt)
        d += 1
    return ChainForest(src, dist, parent)


def reconstruct_chain(forest: ChainForest, end: int) -> Chain:
    if end not in forest.dist:
        raise NotReached(f"vertex {end} is not the end of any alternating chain")
    a, b, edges = [end], [], []
    x = end
    while x not in forest.sources:
        pa, pb, pe = forest.parent[x]
        if forest.dist[pa] + 1 != forest.dist[x]:
            raise InvariantViolation(f"distance does not increase at {x}")
        a.append(pa)
        b.append(pb)
        edges.append(pe)
        x = pa
    a.reverse(), b.reverse(), edges.reverse()
    if len(set(edges)) != len(edges):
        raise InvariantViolation(f"chain to {end} repeats an edge")
    return Chain(tuple(a), tuple(b), tuple(edges))


@dataclass
class BuildState:
    """Mutable image under construction plus the overload bookkeeping."""

    hypergraph: Hypergraph
    k: int
    ends: list[list[int]]
    incidence: list[set[int]]
    phi: tuple[int, ...]
    heavy: set[int] = field(default_factory=set)
    potential: int = 0
    initial_potential: int = 0
    rotation_count: int = 0

    @classmethod
    def from_image(cls, img: Image, k: int) -> BuildState:
        state = cls(
            hypergraph=img.hypergraph,
            k=k,
            ends=[list(p) for p in img.graph.edges],
            incidence=[set(x) for x in img.graph.incidence],
            phi=img.phi,
        )
        state.heavy = {v for v in range(img.graph.n) if state.degree(v) > k}
        state.potential = sum(state.degree(v) for v in state.heavy)
        state.initial_potential = state.potential
        return state

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def forest(self, sources: Iterable[int]) -> ChainForest:
        return _bfs(self.hypergraph.n, self.ends, self.incidence,
                    self.hypergraph.hyperedges, self.phi, sources)

    def image(self) -> Image:
        g = Multigraph(self.hypergraph.n, [tuple(p) for p in self.ends])
        return Image(g, self.phi, self.hypergraph)

    def _account(self, v: int, delta: int) -> None:
        if v in self.heavy:
            self.potential -= self.degree(v) - delta
            self.heavy.discard(v)
        if self.degree(v) > self.k:
            self.heavy.add(v)
            self.potential += self.degree(v)


def _check_chain(state: BuildState, chain: Chain) -> None:
    hyper = state.hypergraph.hyperedges
    if len(set(chain.edges)) != len(chain.edges):
        raise InvalidRotation("chain repeats an edge")
    for i, e in enumerate(chain.edges):
        a, b, c = chain.a[i], chain.b[i], chain.a[i + 1]
        if len({a, b, c}) != 3:
            raise InvalidRotation(f"step {i}: vertices {a}, {b}, {c} not distinct")
        if sorted(state.ends[e]) != sorted((a, b)):
            raise InvalidRotation(f"step {i}: edge {e} does not join {a} and {b}")
        if c not in hyper[state.phi[e]]:
            raise InvalidRotation(f"step {i}: {c} not in hyperedge of edge {e}")


def rotate_chain(state: BuildState, chain: Chain) -> BuildState:
    """Replace each chain edge ``a_i b_i`` by ``b_i a_{i+1}`` in place."""
    if chain.start not in state.heavy:
        raise InvalidRotation(f"chain start {chain.start} is not overloaded")
    if state.degree(chain.end) > state.k - 1:
        raise InvalidRotation(f"chain end {chain.end} has degree {state.degree(chain.end)}")
    _check_chain(state, chain)
    before = state.potential
    for i, e in enumerate(chain.edges):
        a, b, c = chain.a[i], chain.b[i], chain.a[i + 1]
        state.incidence[a].discard(e)
        state.incidence[c].add(e)
        state.ends[e] = [b, c]
    state._account(chain.start, -1)
    state._account(chain.end, +1)
    if state.potential >= before:
        raise InvariantViolation("rotation did not decrease the overload potential")
    state.rotation_count += 1
    return state


def run_build(h: Hypergraph, params: Parameters | None = None,
              strategy: str = "balanced") -> BuildState:
    """Run the rotation loop and return the final state (image + counters)."""
    params = params or parameters(h)
    img = initial_image(h, strategy)
    state = BuildState.from_image(img, params.k)
    if params.delta is None or params.delta == 2:
        if state.heavy:
            raise InvariantViolation("image degree exceeds hypergraph degree")
        return state
    while state.heavy:
        forest = state.forest(state.heavy)
        targets = [(d, v) for v, d in forest.dist.items() if state.degree(v) <= params.k - 1]
        if not targets:
            raise LemmaViolation(
                f"no vertex of degree <= {params.k - 1} reachable from {sorted(state.heavy)}")
        _, end = min(targets)
        rotate_chain(state, reconstruct_chain(forest, end))
    return state


def build_image(h: Hypergraph, params: Parameters | None = None,
                strategy: str = "balanced") -> Image:
    """An image of ``h`` whose maximum degree is at most ``params.k``."""
    return run_build(h, params, strategy).image()
