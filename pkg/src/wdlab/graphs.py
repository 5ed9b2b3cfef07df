"""Simple undirected graphs, orientations, and structural predicates.

Vertices are the contiguous integers 1..n, fixed by the file header; nothing
downstream ever relabels them. Graphs and orientations are immutable value
objects, so every function in the package is safe to call concurrently on
shared inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from .errors import BoundExceededError, ParseError

#: Largest edge count for which all 2^|E| orientations may be enumerated.
DEFAULT_ORIENTATION_BOUND = 20


def _normalize_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    ``edges`` holds normalized pairs (u, v) with u < v.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (u < v):
                raise ValueError(f"edge ({u}, {v}) is not normalized")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{self.n}")

    @classmethod
    def of(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered endpoint pairs in any orientation."""
        return cls(n, frozenset(_normalize_edge(u, v) for u, v in edges))

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices()}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj.values()), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Orientation:
    """Digraph obtained by directing every edge of a simple graph.

    Antisymmetric by construction: at most one of (v, w) and (w, v).
    """

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        for v, w in self.arcs:
            if v == w:
                raise ValueError(f"self-loop at vertex {v}")
            if not (1 <= v <= self.n and 1 <= w <= self.n):
                raise ValueError(f"arc ({v}, {w}) out of range 1..{self.n}")
            if (w, v) in self.arcs:
                raise ValueError(f"both directions of {{{v}, {w}}} present")

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices()}
        for v, w in self.arcs:
            nbrs[v].add(w)
            nbrs[w].add(v)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        """Vertices adjacent to v, ignoring arc direction."""
        return self._adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def out_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a[0] == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for a in self.arcs if a[1] == v)

    @cached_property
    def _out_degrees(self) -> tuple[int, ...]:
        d = [0] * (self.n + 1)
        for v, _ in self.arcs:
            d[v] += 1
        return tuple(d[1:])

    def out_degrees(self) -> tuple[int, ...]:
        """Out-degree of each vertex 1..n, in vertex order."""
        return self._out_degrees

    def underlying(self) -> Graph:
        return Graph.of(self.n, self.arcs)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class VertexPartition:
    """Pairwise-disjoint vertex classes; callers check coverage of 1..n."""

    classes: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for cls in self.classes:
            if cls & seen:
                raise ValueError("partition classes are not disjoint")
            seen |= cls

    def covers(self, n: int) -> bool:
        union = set().union(*self.classes) if self.classes else set()
        return union == set(range(1, n + 1))


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------

def parse(text: str) -> Graph | Orientation:
    """Parse the edge-list file format.

    Lines starting with ``#`` and blank lines are ignored. The first data
    line is the vertex count n; every following line is ``u -- v`` for an
    undirected edge or ``u -> v`` for an arc. A file must stick to one edge
    style; a file with no edge lines parses as an edgeless Graph.
    """
    n: Optional[int] = None
    style: Optional[str] = None
    edges: list[tuple[int, int]] = []
    seen_pairs: set[tuple[int, int]] = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise ParseError(f"line {lineno}: expected vertex count, got {line!r}")
            if n < 0:
                raise ParseError(f"line {lineno}: vertex count must be non-negative")
            continue
        tokens = line.split()
        if len(tokens) != 3 or tokens[1] not in ("--", "->"):
            raise ParseError(f"line {lineno}: expected 'u -- v' or 'u -> v', got {line!r}")
        sep = tokens[1]
        if style is None:
            style = sep
        elif sep != style:
            raise ParseError(f"line {lineno}: mixed edge styles ({style!r} and {sep!r})")
        try:
            u, v = int(tokens[0]), int(tokens[2])
        except ValueError:
            raise ParseError(f"line {lineno}: endpoints must be integers, got {line!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"line {lineno}: vertex id out of range 1..{n}")
        if style == "--":
            key = _normalize_edge(u, v)
            if key in seen_pairs:
                raise ParseError(f"line {lineno}: duplicate edge {{{u}, {v}}}")
        else:
            if (u, v) in seen_pairs:
                raise ParseError(f"line {lineno}: duplicate arc ({u}, {v})")
            if (v, u) in seen_pairs:
                raise ParseError(f"line {lineno}: both directions of {{{u}, {v}}} present")
            key = (u, v)
        seen_pairs.add(key)
        edges.append((u, v))

    if n is None:
        raise ParseError("empty file: missing vertex count")
    if style == "->":
        return Orientation(n, frozenset(edges))
    return Graph.of(n, edges)


def to_text(obj: Graph | Orientation) -> str:
    """Serialize a graph or orientation back to the file format."""
    if isinstance(obj, Graph):
        lines = [str(obj.n)] + [f"{u} -- {v}" for u, v in obj.sorted_edges()]
    else:
        lines = [str(obj.n)] + [f"{v} -> {w}" for v, w in obj.sorted_arcs()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def symmetric_difference_neighborhoods(
    D: Orientation, v: int, w: int
) -> tuple[frozenset[int], frozenset[int]]:
    """Split N(v) symm-diff N(w) along the arc (v, w).

    Returns ``(direct, detour)`` with direct = N(v) \\ N(w) and
    detour = N(w) \\ N[v]. Together with {v} these cover the symmetric
    difference: w always lands in direct, v in neither.
    """
    if (v, w) not in D.arcs:
        raise ValueError(f"({v}, {w}) is not an arc")
    nv, nw = D.neighbors(v), D.neighbors(w)
    return nv - nw, nw - (nv | {v})


def two_color(G: Graph, excluded: frozenset[int] = frozenset()) -> Optional[dict[int, int]]:
    """2-color G, or G minus `excluded`; None if an odd cycle remains.

    Each component is anchored at its smallest vertex, which gets color 0,
    so the coloring is deterministic.
    """
    color: dict[int, int] = {}
    for start in G.vertices():
        if start in excluded or start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for x in G.neighbors(u):
                if x in excluded:
                    continue
                if x not in color:
                    color[x] = 1 - color[u]
                    queue.append(x)
                elif color[x] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> Optional[VertexPartition]:
    """Two-class partition with no intra-class edge, or None on an odd cycle."""
    color = two_color(G)
    if color is None:
        return None
    side0 = frozenset(v for v in G.vertices() if color[v] == 0)
    side1 = frozenset(v for v in G.vertices() if color[v] == 1)
    return VertexPartition((side0, side1))


def simplicial_vertices(G: Graph) -> frozenset[int]:
    """Vertices whose neighborhood induces a clique.

    Isolated and degree-1 vertices qualify (empty and singleton cliques).
    """
    out = set()
    for v in G.vertices():
        nbrs = sorted(G.neighbors(v))
        if all(G.has_edge(a, b) for a, b in itertools.combinations(nbrs, 2)):
            out.add(v)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def gen_sun(k: int) -> Orientation:
    """Oriented 2k-sun: an even cycle with a pendant ear vertex per edge.

    Cycle vertices are 1..2k, directed cyclically; ear vertex 2k+i is
    adjacent to cycle vertices i and i+1 (wrapping), with both edges
    directed into the ear. Every ear has out-degree 0 and is simplicial;
    every cycle vertex has out-degree 3.
    """
    if k < 2:
        raise ValueError(f"sun parameter must be at least 2, got {k}")
    m = 2 * k
    arcs = set()
    for i in range(1, m + 1):
        nxt = i % m + 1
        ear = m + i
        arcs.add((i, nxt))
        arcs.add((i, ear))
        arcs.add((nxt, ear))
    return Orientation(2 * m, frozenset(arcs))


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle length must be at least 3, got {n}")
    return Graph.of(n, [(i, i % n + 1) for i in range(1, n + 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.of(n, itertools.combinations(range(1, n + 1), 2))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"both sides must be non-empty, got {a}, {b}")
    return Graph.of(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


# ---------------------------------------------------------------------------
# Orientation enumeration
# ---------------------------------------------------------------------------

def orientation_from_index(G: Graph, index: int) -> Orientation:
    """Orientation number `index` over the sorted edge list.

    Bit i of `index` set means edge i is directed high-to-low instead of
    its default low-to-high. Indexing is the stable contract that lets a
    sweep be sharded and reproduced.
    """
    edges = G.sorted_edges()
    if not (0 <= index < (1 << len(edges))):
        raise ValueError(f"orientation index {index} out of range")
    arcs = []
    for i, (u, v) in enumerate(edges):
        arcs.append((v, u) if index >> i & 1 else (u, v))
    return Orientation(G.n, frozenset(arcs))


def enumerate_orientations(
    G: Graph,
    bound: Optional[int] = None,
    start: int = 0,
    stop: Optional[int] = None,
) -> Iterator[Orientation]:
    """Yield every orientation of G exactly once, in index order.

    `start`/`stop` restrict to an index range so sweeps can be split
    across workers without changing the overall result.
    """
    limit = DEFAULT_ORIENTATION_BOUND if bound is None else bound
    m = len(G.edges)
    if m > limit:
        raise BoundExceededError(
            f"graph has {m} edges, above the orientation bound {limit}"
            " (raise WD_LAB_BOUND or the bound argument)"
        )
    total = 1 << m
    hi = total if stop is None else min(stop, total)
    for index in range(start, hi):
        yield orientation_from_index(G, index)
