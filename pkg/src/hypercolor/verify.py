"""Definition-level checkers and exhaustive reference solvers.

Nothing here calls into the coloring pipeline; the checkers read edges and
hyperedges directly so they can serve as independent ground truth.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence, Union

from .core import Coloring, HypercolorError, Hypergraph, Image, Multigraph

MAX_ORACLE_VERTICES = 16
MAX_IMAGE_CHOICES = 10**7


class InvalidColoring(HypercolorError):
    pass


class TooLarge(HypercolorError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: Any


@dataclass
class VerifyReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        return [f"{v.kind} {v.witness}" for v in self.violations]


def _colors(n: int, c: Union[Coloring, Sequence[int]]) -> Sequence[int]:
    cols = c.colors if isinstance(c, Coloring) else c
    if len(cols) != n:
        raise InvalidColoring(f"coloring covers {len(cols)} vertices, instance has {n}")
    return cols


def _edge_list(g) -> list[tuple[int, int]]:
    if isinstance(g, Multigraph):
        return list(g.edges)
    return list(g.edge_pairs())


def verify_proper_hypergraph(h: Hypergraph, c) -> VerifyReport:
    cols = _colors(h.n, c)
    report = VerifyReport()
    for j, e in enumerate(h.hyperedges):
        if len({cols[x] for x in e}) < 2:
            report.violations.append(Violation("monochromatic_hyperedge", j))
    return report


def verify_proper_graph(g, c) -> VerifyReport:
    cols = _colors(g.n, c)
    report = VerifyReport()
    seen = set()
    for u, v in _edge_list(g):
        key = (min(u, v), max(u, v))
        if cols[u] == cols[v] and key not in seen:
            seen.add(key)
            report.violations.append(Violation("monochromatic_edge", key))
    return report


def verify_dynamic(g, c) -> VerifyReport:
    cols = _colors(g.n, c)
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in _edge_list(g):
        nbrs[u].add(v)
        nbrs[v].add(u)
    report = VerifyReport()
    for v in range(g.n):
        if len(nbrs[v]) >= 2 and len({cols[x] for x in nbrs[v]}) < 2:
            report.violations.append(Violation("monochromatic_neighborhood", v))
    return report


def verify_image(h: Hypergraph, img: Image) -> VerifyReport:
    report = VerifyReport()
    if len(img.phi) != len(img.graph.edges):
        report.violations.append(Violation("phi_not_total", (len(img.phi), len(img.graph.edges))))
    if sorted(img.phi) != list(range(h.m)):
        report.violations.append(Violation("phi_not_bijective", tuple(img.phi)))
    if img.graph.n != h.n:
        report.violations.append(Violation("vertex_count", (img.graph.n, h.n)))
    for e, (u, v) in enumerate(img.graph.edges):
        if e >= len(img.phi) or not 0 <= img.phi[e] < h.m:
            continue
        members = set(h.hyperedges[img.phi[e]])
        if u not in members or v not in members:
            report.violations.append(Violation("edge_outside_hyperedge", (e, img.phi[e])))
    return report


# -- exhaustive solvers ------------------------------------------------------

def _guard(n: int) -> None:
    if n > MAX_ORACLE_VERTICES:
        raise TooLarge(f"{n} vertices exceeds the oracle bound of {MAX_ORACLE_VERTICES}")


def _backtrack_min(n: int, checks: list[list[Callable[[list[int]], bool]]],
                   max_palette: int) -> int | None:
    """Smallest palette admitting a coloring that passes every check.

    ``checks[i]`` holds the constraints that become decidable once vertices
    ``0..i`` are colored.  Vertex ``i`` may only use colors ``0..i``.
    """
    for palette in range(1, max_palette + 1):
        cols = [0] * n

        def extend(i: int) -> bool:
            if i == n:
                return True
            for c in range(min(i + 1, palette)):
                cols[i] = c
                if all(ok(cols) for ok in checks[i]) and extend(i + 1):
                    return True
            return False

        if extend(0):
            return palette
    return None


def _hyper_checks(h: Hypergraph) -> list[list[Callable]]:
    checks: list[list[Callable]] = [[] for _ in range(h.n)]
    for e in h.hyperedges:
        checks[max(e)].append(lambda cols, e=e: len({cols[x] for x in e}) > 1)
    return checks


def brute_force_min_colors(h: Hypergraph, max_palette: int | None = None) -> int | None:
    """Exact minimum proper palette for ``h``; None if above ``max_palette``."""
    _guard(h.n)
    if h.n == 0:
        return 1
    return _backtrack_min(h.n, _hyper_checks(h), max_palette or h.n)


def brute_force_min_dynamic_colors(g, max_palette: int | None = None) -> int | None:
    _guard(g.n)
    if g.n == 0:
        return 1
    nbrs: list[set[int]] = [set() for _ in range(g.n)]
    for u, v in _edge_list(g):
        nbrs[u].add(v)
        nbrs[v].add(u)
    checks: list[list[Callable]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        if len(nbrs[v]) >= 2:
            nb = tuple(nbrs[v])
            checks[max(nb)].append(lambda cols, nb=nb: len({cols[x] for x in nb}) > 1)
    return _backtrack_min(g.n, checks, max_palette or g.n)


def enumerate_min_colors(n: int, accept: Callable[[Sequence[int]], bool],
                         max_palette: int | None = None) -> int | None:
    """Pruning-free reference: try every coloring in ``range(p)**n``."""
    _guard(n)
    if n == 0:
        return 1
    for palette in range(1, (max_palette or n) + 1):
        if any(accept(cols) for cols in itertools.product(range(palette), repeat=n)):
            return palette
    return None


def brute_force_image_min_max_degree(h: Hypergraph) -> int:
    """Least possible maximum degree over all images of ``h``."""
    choices = math.prod(len(e) * (len(e) - 1) // 2 for e in h.hyperedges)
    if choices > MAX_IMAGE_CHOICES:
        raise TooLarge(f"{choices} endpoint choices exceeds {MAX_IMAGE_CHOICES}")
    if not h.hyperedges:
        return 0
    pairs = [list(itertools.combinations(e, 2)) for e in h.hyperedges]
    deg = [0] * h.n
    best = max(h.degrees())  # any image is at least this good

    def search(j: int, cur: int) -> None:
        nonlocal best
        if cur >= best:
            return
        if j == len(pairs):
            best = cur
            return
        for u, v in pairs[j]:
            deg[u] += 1
            deg[v] += 1
            search(j + 1, max(cur, deg[u], deg[v]))
            deg[u] -= 1
            deg[v] -= 1

    search(0, 0)
    return best
