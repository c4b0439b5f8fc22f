"""Proper hypergraph colorings in ``k + 1`` and ``k`` colors.

Both routes color a bounded-degree image of the hypergraph: every hyperedge
contains both ends of its image edge, so a proper coloring of the image is a
proper coloring of the hypergraph.

For ``k`` colors the image may still contain ``K_{k+1}`` components, which
Brooks' theorem excludes.  In every such clique one edge ``u w`` is swung to
``u v`` with ``v`` taken from the same hyperedge outside ``{u, w}``.  The
cliques then form a functional digraph (one arc per clique, towards the
component holding ``v``).  Cliques nobody points at are peeled off and
colored last; the remaining cliques lie on directed cycles, each colored as a
unit.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .brooks import (
    BrooksPrecondition,
    SimpleProjection,
    _greedy_into,
    brooks_component_coloring,
    find_clique_components,
    greedy_coloring,
)
from .core import (
    Coloring,
    HypercolorError,
    Hypergraph,
    Image,
    InvariantViolation,
    Multigraph,
    parameters,
)
from .image_builder import run_build


class UseKPlusOne(HypercolorError):
    """The ``k``-color route needs min hyperedge size >= 3 and ``k >= 3``."""


class DeltaTooSmall(HypercolorError):
    pass


class PipelineInvariantViolation(InvariantViolation):
    pass


@dataclass(frozen=True)
class CliqueRecord:
    index: int
    vertices: tuple[int, ...]
    u: int
    w: int
    v: int
    edge_id: int


@dataclass
class CliqueDigraph:
    """Nodes are components of the untransformed image; one arc per clique."""

    nodes: list[tuple[int, ...]]
    records: list[CliqueRecord]
    clique_node: dict[int, int]   # record index -> its own node
    arcs: dict[int, int]          # record index -> node containing v

    def is_clique(self, node: int) -> bool:
        return node in self.clique_node.values()


def _bump(counters: Counter | None, key: str, by: int = 1) -> None:
    if counters is not None:
        counters[key] += by


def color_k_plus_1(h: Hypergraph, counters: Counter | None = None) -> Coloring:
    params = parameters(h)
    state = run_build(h, params)
    _bump(counters, "rotations", state.rotation_count)
    sp = SimpleProjection.from_multigraph(state.image().graph)
    return greedy_coloring(sp, range(h.n), params.k + 1)


def transform_image(img: Image, cliques: list[tuple[int, ...]]) -> tuple[Image, list[CliqueRecord]]:
    """Swing one edge per clique out of ``{u, w}`` onto ``{u, v}``.

    All records are computed against the untransformed image and applied in
    a single pass afterwards.
    """
    g = img.graph
    records = []
    for i, clique in enumerate(cliques):
        members = set(clique)
        inside = sorted({e for x in clique for e in g.incidence[x]
                         if set(g.edges[e]) <= members})
        for e in inside:
            u, w = sorted(g.edges[e])
            spare = [x for x in img.hyperedge_of(e) if x != u and x != w]
            if spare:
                records.append(CliqueRecord(i, tuple(clique), u, w, min(spare), e))
                break
        else:
            raise DeltaTooSmall(f"no hyperedge of clique {clique} has a third vertex")
    edges = list(g.edges)
    for r in records:
        edges[r.edge_id] = (r.u, r.v)
    return Image(Multigraph(g.n, edges), img.phi, img.hypergraph), records


def build_clique_digraph(components: list[tuple[int, ...]], records: list[CliqueRecord]) -> CliqueDigraph:
    node_of = {x: i for i, comp in enumerate(components) for x in comp}
    clique_node = {r.index: node_of[r.u] for r in records}
    arcs = {r.index: node_of[r.v] for r in records}
    return CliqueDigraph(list(components), list(records), clique_node, arcs)


def eliminate_unpointed_cliques(f: CliqueDigraph) -> tuple[list[tuple[int, list[int]]], CliqueDigraph]:
    """Peel cliques with no incoming arc, smallest index first.

    Returns the deferred cliques as ``(record index, coloring order)`` in
    deferral order, and the residual digraph.
    """
    remaining = {r.index for r in f.records}
    indeg = Counter(f.arcs[i] for i in remaining)
    deferred = []
    while True:
        free = [i for i in sorted(remaining) if indeg[f.clique_node[i]] == 0]
        if not free:
            break
        i = free[0]
        r = f.records[i]
        middle = sorted(set(r.vertices) - {r.u, r.w})
        deferred.append((i, [r.u, *middle, r.w]))
        remaining.discard(i)
        indeg[f.arcs[i]] -= 1
    residual = CliqueDigraph(
        f.nodes,
        f.records,
        {i: f.clique_node[i] for i in sorted(remaining)},
        {i: f.arcs[i] for i in sorted(remaining)},
    )
    return deferred, residual


def residual_cycles(f: CliqueDigraph) -> list[list[CliqueRecord]]:
    by_node = {node: i for i, node in f.clique_node.items()}
    indeg = Counter(f.arcs.values())
    for i, node in f.clique_node.items():
        if indeg[node] != 1:
            raise PipelineInvariantViolation(f"clique {i} has in-degree {indeg[node]} after peeling")
    seen: set[int] = set()
    cycles = []
    for start in sorted(f.clique_node):
        if start in seen:
            continue
        cycle = []
        i = start
        while i not in seen:
            seen.add(i)
            cycle.append(f.records[i])
            if f.arcs[i] not in by_node:
                raise PipelineInvariantViolation(f"clique {i} points outside the cliques")
            i = by_node[f.arcs[i]]
        if i != start:
            raise PipelineInvariantViolation("residual clique digraph is not a union of cycles")
        cycles.append(cycle)
    return cycles


class _Sub:
    """Induced sub-multigraph with vertex deletion."""

    def __init__(self, g: Multigraph, vertices):
        self.alive = set(vertices)
        self.adj: dict[int, list[int]] = {x: [] for x in self.alive}
        for u, v in g.edges:
            if u in self.alive and v in self.alive:
                self.adj[u].append(v)
                self.adj[v].append(u)

    def degree(self, x: int) -> int:
        return sum(1 for y in self.adj[x] if y in self.alive)

    def max_degree(self) -> int:
        return max((self.degree(x) for x in self.alive), default=0)


def color_cycle_union(g: Multigraph, cycle: list[CliqueRecord], k: int,
                      counters: Counter | None = None) -> dict[int, int]:
    """Color the union of one directed cycle of cliques with ``k`` colors.

    ``g`` is the transformed image.  Degrees are multigraph degrees inside the
    union, so a doubled edge counts twice.
    """
    union = sorted(x for r in cycle for x in r.vertices)
    star = _Sub(g, union)
    sp = SimpleProjection.from_edges(g.n, [(u, v) for u, v in g.edges
                                           if u in star.alive and v in star.alive])

    if star.max_degree() <= k:
        _bump(counters, "case_brooks")
        try:
            return brooks_component_coloring(sp, k, union)
        except BrooksPrecondition as exc:
            raise PipelineInvariantViolation(f"cycle union not Brooks-colorable: {exc}") from exc

    if len(cycle) == 1:
        _bump(counters, "case_loop")
        r = cycle[0]
        if r.v not in r.vertices:
            raise PipelineInvariantViolation("single-clique cycle without a loop")
        colors = {r.u: 0, r.w: 0}
        for c, x in enumerate(sorted(set(r.vertices) - {r.u, r.w}), start=1):
            colors[x] = c
        if colors[r.u] == colors[r.v]:
            raise PipelineInvariantViolation("loop case gave u and v the same color")
        return colors

    deleted = []
    for r in cycle:
        over = [x for x in r.vertices if star.degree(x) > k]
        if not over:
            continue
        if len(over) != 1 or over[0] == r.w:
            raise PipelineInvariantViolation(f"unexpected overloaded vertices {over} in {r.vertices}")
        x = over[0]
        if star.degree(r.w) != k - 1:
            raise PipelineInvariantViolation(f"w={r.w} has degree {star.degree(r.w)}")
        star.alive.discard(r.w)
        deleted.append(r.w)
        if x == r.u:
            _bump(counters, "case_cut_x_is_u")
            ys = [y for y in sorted(set(r.vertices) - {r.u, r.w}) if star.degree(y) == k - 1]
            if not ys:
                raise PipelineInvariantViolation(f"no removable y in {r.vertices}")
            star.alive.discard(ys[0])
            deleted.append(ys[0])
        else:
            _bump(counters, "case_cut_x_not_u")

    if star.max_degree() > k:
        raise PipelineInvariantViolation("reduced cycle union still exceeds degree k")
    try:
        colors = brooks_component_coloring(sp, k, star.alive)
    except BrooksPrecondition as exc:
        raise PipelineInvariantViolation(f"reduced cycle union not Brooks-colorable: {exc}") from exc
    adj = {x: sp.adj[x] & set(union) for x in union}
    try:
        _greedy_into(adj, reversed(deleted), k, colors, max_seen=k - 1)
    except InvariantViolation as exc:
        raise PipelineInvariantViolation(str(exc)) from exc
    return colors


def color_image_k(img: Image, k: int, counters: Counter | None = None) -> Coloring:
    """Color a hypergraph from an image of maximum degree <= ``k`` in ``k`` colors."""
    if k < 3:
        raise UseKPlusOne(f"k={k} < 3")
    if img.graph.max_degree() > k:
        raise ValueError(f"image degree {img.graph.max_degree()} exceeds k={k}")
    sp = SimpleProjection.from_multigraph(img.graph)
    components = sp.components()
    cliques = find_clique_components(sp, k)
    new_img, records = transform_image(img, cliques)
    digraph = build_clique_digraph(components, records)
    deferred, residual = eliminate_unpointed_cliques(digraph)
    cycles = residual_cycles(residual)

    g2 = new_img.graph
    sp2 = SimpleProjection.from_multigraph(g2)
    clique_sets = set(cliques)
    colors: dict[int, int] = {}
    for comp in components:
        if comp in clique_sets:
            continue
        _bump(counters, "brooks_component")
        colors.update(brooks_component_coloring(sp2, k, comp))
    for cycle in cycles:
        colors.update(color_cycle_union(g2, cycle, k, counters))
    for _, order in reversed(deferred):
        _bump(counters, "step1")
        try:
            _greedy_into(sp2.adj, order, k, colors, max_seen=k - 1)
        except InvariantViolation as exc:
            raise PipelineInvariantViolation(str(exc)) from exc

    if len(colors) != g2.n:
        raise PipelineInvariantViolation("some vertices were left uncolored")
    out = Coloring([colors[x] for x in range(g2.n)], k)
    for e, (u, v) in enumerate(g2.edges):
        if out[u] == out[v]:
            raise PipelineInvariantViolation(f"edge {e} = ({u}, {v}) is monochromatic")
    return out


def color_k(h: Hypergraph, image: Image | None = None,
            counters: Counter | None = None) -> Coloring:
    """Proper coloring of ``h`` with ``k`` colors (needs min size >= 3, ``k >= 3``).

    ``image`` may supply a precomputed image of maximum degree <= k; by
    default one is built.
    """
    params = parameters(h)
    if params.delta is None or params.delta < 3 or params.k < 3:
        raise UseKPlusOne(f"needs min hyperedge size >= 3 and k >= 3 (delta={params.delta}, k={params.k})")
    if image is None:
        state = run_build(h, params)
        _bump(counters, "rotations", state.rotation_count)
        image = state.image()
    elif image.hypergraph != h:
        raise ValueError("image belongs to a different hypergraph")
    return color_image_k(image, params.k, counters)
