"""Domain types and the plain-text instance formats.

Vertices are dense integers ``0..n-1``.  Hyperedges and graph edges are
identified by their position in the file / sequence, never by content, so two
hyperedges over the same vertex set stay distinct.

Text formats (ASCII, newline terminated, ``#`` lines are comments)::

    h <n>                 g <n>                c <vertex> <color>
    e <v1> <v2> ... <vt>  a <u> <v>            ...
                                               palette <count>
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union


class HypercolorError(Exception):
    """Base class for every error raised by this package."""


class InvariantViolation(HypercolorError):
    """An internal consistency check failed; this indicates a bug."""


class InvalidParameters(HypercolorError):
    pass


class ParseError(HypercolorError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Hypergraph:
    n: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, hyperedges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges = []
        for j, e in enumerate(hyperedges):
            members = tuple(sorted(set(e)))
            if len(members) < 2:
                raise ValueError(f"hyperedge {j} has fewer than two vertices")
            if members[0] < 0 or members[-1] >= n:
                raise ValueError(f"hyperedge {j} has a vertex outside [0, {n})")
            edges.append(members)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "hyperedges", tuple(edges))

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.hyperedges:
            for v in e:
                deg[v] += 1
        return deg


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph; edge ``i`` is ``edges[i]``, parallel edges allowed."""

    n: int
    edges: tuple[tuple[int, int], ...]
    incidence: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        pairs = []
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"edge {i} is a self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} has a vertex outside [0, {n})")
            pairs.append((u, v))
            inc[u].append(i)
            inc[v].append(i)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(pairs))
        object.__setattr__(self, "incidence", tuple(tuple(x) for x in inc))

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(x) for x in self.incidence]

    def max_degree(self) -> int:
        return max((len(x) for x in self.incidence), default=0)

    def other_end(self, edge_id: int, v: int) -> int:
        a, b = self.edges[edge_id]
        return b if a == v else a

    def neighbors(self, v: int) -> set[int]:
        return {self.other_end(e, v) for e in self.incidence[v]}


@dataclass(frozen=True)
class Image:
    """A multigraph with one edge inside each hyperedge.

    ``phi[edge_id]`` is the index of the hyperedge containing that edge.
    """

    graph: Multigraph
    phi: tuple[int, ...]
    hypergraph: Hypergraph

    def hyperedge_of(self, edge_id: int) -> tuple[int, ...]:
        return self.hypergraph.hyperedges[self.phi[edge_id]]


@dataclass(frozen=True)
class Parameters:
    delta: int | None
    Delta: int
    k: int


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette: int

    def __init__(self, colors: Iterable[int], palette: int):
        cols = tuple(int(c) for c in colors)
        if any(c < 0 or c >= palette for c in cols):
            raise ValueError(f"color outside palette of size {palette}")
        object.__setattr__(self, "colors", cols)
        object.__setattr__(self, "palette", palette)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def used(self) -> int:
        return len(set(self.colors))


def compute_k(Delta: int, delta: int) -> Parameters:
    if delta < 2:
        raise InvalidParameters(f"minimum hyperedge size must be >= 2, got {delta}")
    if Delta < 0:
        raise InvalidParameters(f"maximum degree must be >= 0, got {Delta}")
    return Parameters(delta=delta, Delta=Delta, k=(2 * Delta + delta - 1) // delta)


def hypergraph_stats(h: Hypergraph) -> tuple[int | None, int, list[int]]:
    """Return ``(delta, Delta, degrees)``; ``delta`` is None without hyperedges."""
    deg = h.degrees()
    delta = min((len(e) for e in h.hyperedges), default=None)
    return delta, max(deg, default=0), deg


def parameters(h: Hypergraph) -> Parameters:
    delta, Delta, _ = hypergraph_stats(h)
    if delta is None:
        return Parameters(delta=None, Delta=0, k=0)
    return compute_k(Delta, delta)


# -- text formats ----------------------------------------------------------

def _lines(text: bytes | str):
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(1, "input is not ASCII") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(lineno: int, tokens: Sequence[str]) -> list[int]:
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None
    if any(v < 0 for v in vals):
        raise ParseError(lineno, "negative integer")
    return vals


def parse_instance(text: bytes | str) -> Union[Hypergraph, Multigraph]:
    lines = _lines(text)
    try:
        lineno, tok = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header") from None
    if len(tok) != 2 or tok[0] not in ("h", "g"):
        raise ParseError(lineno, "header must be 'h <n>' or 'g <n>'")
    (n,) = _ints(lineno, tok[1:])
    kind = tok[0]
    tag = "e" if kind == "h" else "a"
    items = []
    for lineno, tok in lines:
        if tok[0] != tag:
            raise ParseError(lineno, f"expected a '{tag}' line, got {tok[0]!r}")
        vals = _ints(lineno, tok[1:])
        bad = [v for v in vals if v >= n]
        if bad:
            raise ParseError(lineno, f"vertex {bad[0]} out of range [0, {n})")
        if kind == "h":
            if len(set(vals)) < 2:
                raise ParseError(lineno, "hyperedge needs at least two distinct vertices")
            items.append(vals)
        else:
            if len(vals) != 2:
                raise ParseError(lineno, "edge line needs exactly two vertices")
            if vals[0] == vals[1]:
                raise ParseError(lineno, "self-loop")
            items.append((vals[0], vals[1]))
    return Hypergraph(n, items) if kind == "h" else Multigraph(n, items)


def parse_coloring(text: bytes | str) -> Coloring:
    colors: list[int] = []
    palette = None
    for lineno, tok in _lines(text):
        if palette is not None:
            raise ParseError(lineno, "content after palette trailer")
        if tok[0] == "c" and len(tok) == 3:
            v, c = _ints(lineno, tok[1:])
            if v != len(colors):
                raise ParseError(lineno, f"expected vertex {len(colors)}, got {v}")
            colors.append(c)
        elif tok[0] == "palette" and len(tok) == 2:
            (palette,) = _ints(lineno, tok[1:])
            bad = [c for c in colors if c >= palette]
            if bad:
                raise ParseError(lineno, f"color {bad[0]} outside palette {palette}")
        else:
            raise ParseError(lineno, "expected 'c <vertex> <color>' or 'palette <count>'")
    if palette is None:
        raise ParseError(len(colors) + 1, "missing palette trailer")
    return Coloring(colors, palette)


def write_instance(obj: Union[Hypergraph, Multigraph, Coloring]) -> bytes:
    if isinstance(obj, Hypergraph):
        out = [f"h {obj.n}"]
        out += ["e " + " ".join(map(str, e)) for e in obj.hyperedges]
    elif isinstance(obj, Multigraph):
        out = [f"g {obj.n}"]
        out += [f"a {u} {v}" for u, v in obj.edges]
    elif isinstance(obj, Coloring):
        out = [f"c {v} {c}" for v, c in enumerate(obj.colors)]
        out.append(f"palette {obj.palette}")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return ("\n".join(out) + "\n").encode("ascii")
