"""Named instances and seeded random generators.

Randomness comes from SplitMix64 so every port can reproduce the instances
bit for bit.  All arithmetic is on unsigned 64-bit integers::

    state  <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z      <- state
    z      <- ((z xor (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z      <- ((z xor (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output    z xor (z >> 31)

``below(b)`` draws outputs until one is smaller than ``2^64 - (2^64 mod b)``
and returns it ``mod b``.  A ``t``-subset of ``0..n-1`` is the sorted prefix
of a partial Fisher-Yates shuffle of ``[0, 1, ..., n-1]``: for ``i`` in
``0..t-1`` swap position ``i`` with ``i + below(n - i)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import HypercolorError, Hypergraph, Image, Multigraph

MASK = (1 << 64) - 1
MAX_REJECTIONS = 1000


class GenerationFailed(HypercolorError):
    pass


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def subset(self, n: int, t: int) -> list[int]:
        items = list(range(n))
        for i in range(t):
            j = i + self.below(n - i)
            items[i], items[j] = items[j], items[i]
        return sorted(items[:t])


@dataclass(frozen=True)
class GenParams:
    n: int
    m: int
    size_range: tuple[int, int]
    max_degree_cap: int | None = None
    seed: int = 0

    def __post_init__(self):
        lo, hi = self.size_range
        if not 2 <= lo <= hi <= self.n:
            raise ValueError(f"need 2 <= lo <= hi <= n, got {self.size_range} with n={self.n}")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if self.max_degree_cap is not None and self.m * lo > self.n * self.max_degree_cap:
            raise GenerationFailed(
                f"{self.m} hyperedges of size >= {lo} cannot fit degree cap "
                f"{self.max_degree_cap} on {self.n} vertices")


def fano() -> Hypergraph:
    return Hypergraph(7, [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                          (1, 4, 6), (2, 3, 6), (2, 4, 5)])


def random_hypergraph(p: GenParams) -> Hypergraph:
    rng = SplitMix64(p.seed)
    deg = [0] * p.n
    edges = []
    lo, hi = p.size_range
    for j in range(p.m):
        for _ in range(MAX_REJECTIONS):
            e = rng.subset(p.n, rng.between(lo, hi))
            if p.max_degree_cap is None or all(deg[x] < p.max_degree_cap for x in e):
                break
        else:
            raise GenerationFailed(f"hyperedge {j}: degree cap {p.max_degree_cap} not met "
                                   f"after {MAX_REJECTIONS} draws")
        for x in e:
            deg[x] += 1
        edges.append(e)
    return Hypergraph(p.n, edges)


def random_graph(n: int, probability: Fraction | str | tuple[int, int], seed: int) -> Multigraph:
    """Simple random graph; pair ``(i, j)`` is kept when ``below(den) < num``."""
    p = Fraction(*probability) if isinstance(probability, tuple) else Fraction(probability)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    edges = [(i, j) for i, j in combinations(range(n), 2)
             if rng.below(p.denominator) < p.numerator]
    return Multigraph(n, edges)


def ensemble(count: int, seed: int, n_range=(6, 14), m_range=(4, 20),
             size_range=(3, 5), cap: int | None = 6):
    """Yield ``(instance_id, GenParams, Hypergraph)``; instance params come from ``seed``."""
    rng = SplitMix64(seed)
    for i in range(count):
        n = rng.between(*n_range)
        m = rng.between(*m_range)
        lo, hi = size_range[0], min(size_range[1], n)
        if cap is not None:
            m = min(m, n * cap // hi)
        for _ in range(MAX_REJECTIONS):
            p = GenParams(n, m, (lo, hi), cap, rng.next())
            try:
                h = random_hypergraph(p)
                break
            except GenerationFailed:
                continue
        else:
            raise GenerationFailed(f"instance {i}: no seed met the degree cap")
        yield i, p, h


def clique_arrangement(k: int, targets: list[int], extra_cycle: int = 0) -> tuple[Hypergraph, Image]:
    """Hypergraph plus an explicit image made of ``len(targets)`` copies of ``K_{k+1}``.

    Clique ``i`` occupies vertices ``i*(k+1) .. i*(k+1)+k``.  Its first edge
    joins its two lowest vertices and lives in a 3-vertex hyperedge whose
    third vertex is ``targets[i]``.  Optionally a cycle on ``extra_cycle``
    further vertices is appended.  Every other hyperedge gets a third vertex
    from a pool of filler vertices, which are used often enough that the
    hypergraph's own bound is exactly ``k`` (min size 3, max degree
    ``floor(3k/2)``).
    """
    if k < 3 or not targets:
        raise ValueError("need k >= 3 and at least one clique")
    size = k + 1
    q = len(targets)
    base_n = q * size + extra_cycle
    pairs: list[tuple[int, int]] = []
    thirds: list[int | None] = []
    for i, t in enumerate(targets):
        vs = range(i * size, (i + 1) * size)
        for u, w in combinations(vs, 2):
            pairs.append((u, w))
            thirds.append(t if (u, w) == (vs[0], vs[1]) else None)
    c0 = q * size
    for i in range(extra_cycle):
        pairs.append((c0 + i, c0 + (i + 1) % extra_cycle))
        thirds.append(None)

    Delta = 3 * k // 2
    deg = [0] * base_n
    for (u, w), t in zip(pairs, thirds):
        deg[u] += 1
        deg[w] += 1
        if t is not None:
            if not 0 <= t < base_n or t in (u, w):
                raise ValueError(f"bad target {t}")
            deg[t] += 1
    n = base_n
    fill_use: dict[int, int] = {}
    hyperedges = []
    for (u, w), t in zip(pairs, thirds):
        if t is None:
            if not fill_use or fill_use[n - 1] == Delta:
                n += 1
                fill_use[n - 1] = 0
            t = n - 1
            fill_use[t] += 1
        hyperedges.append((u, w, t))
    if max(deg) > Delta:
        raise ValueError("targets overload a clique vertex")
    h = Hypergraph(n, hyperedges)
    img = Image(Multigraph(n, pairs), tuple(range(len(pairs))), h)
    return h, img
