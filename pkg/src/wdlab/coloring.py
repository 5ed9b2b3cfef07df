"""Additive-coloring checks, list-coloring search, and the sweep driver.

A labeling is an additive coloring when the neighbor-sums c(v) of the
labels form a proper coloring. Certification routes: a nonzero additive
coefficient guarantees a coloring exists inside any lists of size
out-degree + 1; structural hypotheses (odd cycles covered by simplicial
sinks, or a qualifying class of a 3-partition) force the odd Eulerian
count of W(D) to zero, which makes the coefficient positive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Mapping, Optional, Sequence

from .errors import BoundExceededError
from .graphs import (
    Graph,
    Orientation,
    VertexPartition,
    enumerate_orientations,
    orientation_from_index,
    simplicial_vertices,
    two_color,
)
from .polynomials import additive_coefficient

#: Largest product of list sizes the coloring search will walk.
DEFAULT_COLORING_BOUND = 10_000_000

#: Largest vertex count for the brute-force search over proper 3-partitions.
TRIPARTITE_SEARCH_LIMIT = 12


def induced_sums(G: Graph, ell: Mapping[int, int]) -> dict[int, int]:
    """Neighbor-sum c(v) for every vertex under the labeling."""
    missing = [v for v in G.vertices() if v not in ell]
    if missing:
        raise ValueError(f"labeling is missing vertices {missing}")
    return {v: sum(ell[u] for u in G.neighbors(v)) for v in G.vertices()}


def is_additive_coloring(G: Graph, ell: Mapping[int, int]) -> bool:
    """True when neighbor-sums differ across every edge."""
    c = induced_sums(G, ell)
    return all(c[u] != c[v] for u, v in G.edges)


def _validated_lists(G: Graph, lists: Mapping[int, Sequence[int]]) -> list[list[int]]:
    if set(lists) != set(G.vertices()):
        raise ValueError("lists must cover exactly the vertices 1..n")
    out = []
    for v in G.vertices():
        values = sorted(set(lists[v]))
        if not values:
            raise ValueError(f"empty list for vertex {v}")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in values):
            raise ValueError(f"list for vertex {v} must hold positive integers")
        out.append(values)
    return out


def find_additive_coloring(
    G: Graph,
    lists: Mapping[int, Sequence[int]],
    bound: Optional[int] = None,
) -> Optional[dict[int, int]]:
    """First labeling from the lists whose neighbor-sums properly color G.

    Walks the product of the sorted lists in lexicographic order, so the
    answer is deterministic; returns None when no combination works.
    """
    sorted_lists = _validated_lists(G, lists)
    limit = DEFAULT_COLORING_BOUND if bound is None else bound
    space = prod(len(values) for values in sorted_lists)
    if space > limit:
        raise BoundExceededError(
            f"search space of {space} labelings is above the bound {limit}"
        )
    edges = G.sorted_edges()
    adjacency = [tuple(G.neighbors(v)) for v in G.vertices()]
    for combo in itertools.product(*sorted_lists):
        ok = True
        for u, v in edges:
            cu = sum(combo[x - 1] for x in adjacency[u - 1])
            cv = sum(combo[x - 1] for x in adjacency[v - 1])
            if cu == cv:
                ok = False
                break
        if ok:
            return {v: combo[v - 1] for v in G.vertices()}
    return None


def _require_orients(G: Graph, D: Orientation) -> None:
    if D.n != G.n or D.underlying() != G:
        raise ValueError("orientation does not orient the given graph")


def check_simplicial_sink_hypothesis(G: Graph, D: Orientation) -> bool:
    """Does every odd cycle of G pass through a simplicial sink of D?

    Decided as bipartiteness of G minus the set S of simplicial vertices
    with out-degree 0, which is exactly "every odd cycle meets S". When
    true, W(D) has no odd Eulerian subdigraph, so list colorability at
    sizes out-degree + 1 follows.
    """
    _require_orients(G, D)
    return two_color(G, excluded=_simplicial_sinks(G, D)) is not None


def _simplicial_sinks(G: Graph, D: Orientation) -> frozenset[int]:
    return frozenset(u for u in simplicial_vertices(G) if D.out_degree(u) == 0)


def _qualifies(sinks: frozenset[int], cls: frozenset[int]) -> bool:
    # vacuous empty classes do not witness the hypothesis
    return bool(cls) and cls <= sinks


def check_tripartite_hypothesis(
    G: Graph,
    D: Orientation,
    partition: Optional[VertexPartition] = None,
) -> bool:
    """Is there a proper 3-partition with a class of simplicial sinks?

    With a supplied partition only that partition is examined; it must be
    a proper coloring with at most 3 classes covering 1..n. Without one,
    all proper 3-colorings are searched (vertex count capped), still for
    the fixed orientation D. A qualifying class must be non-empty.
    """
    _require_orients(G, D)
    sinks = _simplicial_sinks(G, D)
    if partition is not None:
        if len(partition.classes) > 3 or not partition.covers(G.n):
            raise ValueError("expected a partition of 1..n into at most 3 classes")
        for cls in partition.classes:
            for u, v in G.edges:
                if u in cls and v in cls:
                    raise ValueError(f"partition is not a proper coloring: edge ({u}, {v})")
        return any(_qualifies(sinks, cls) for cls in partition.classes)

    if G.n > TRIPARTITE_SEARCH_LIMIT:
        raise BoundExceededError(
            f"graph has {G.n} vertices, above the 3-partition search limit"
            f" {TRIPARTITE_SEARCH_LIMIT}"
        )
    colors = [0] * (G.n + 1)

    def assign(v: int) -> bool:
        if v > G.n:
            classes = [
                frozenset(u for u in G.vertices() if colors[u] == c) for c in range(3)
            ]
            return any(_qualifies(sinks, cls) for cls in classes)
        for c in range(3):
            if any(colors[u] == c for u in G.neighbors(v) if u < v):
                continue
            colors[v] = c
            if assign(v + 1):
                return True
        return False

    return assign(1)


@dataclass(frozen=True)
class SweepReport:
    """Outcome of scanning every orientation of a graph.

    `histogram` maps additive coefficient values to how many orientations
    produced them; the witness is the lowest-index orientation with a
    nonzero coefficient, or None when all coefficients vanish.
    """

    examined: int
    histogram: dict[int, int]
    zero_count: int
    witness_index: Optional[int]
    witness: Optional[Orientation]

    @property
    def has_witness(self) -> bool:
        return self.witness_index is not None


def conjecture_sweep(
    G: Graph,
    bound: Optional[int] = None,
    limit: Optional[int] = None,
    threads: int = 1,
) -> SweepReport:
    """Compute the additive coefficient of every orientation of G.

    `limit` truncates the scan to the first orientations by index;
    `threads` splits the index range, with chunk results merged in order
    so the report never depends on the worker count.
    """
    total = 1 << len(G.edges)
    examined = total if limit is None else min(limit, total)
    histogram: dict[int, int] = {}
    witness_index: Optional[int] = None

    def scan(start: int, stop: int) -> tuple[dict[int, int], Optional[int]]:
        hist: dict[int, int] = {}
        first: Optional[int] = None
        index = start
        for D in enumerate_orientations(G, bound=bound, start=start, stop=stop):
            coef = additive_coefficient(D)
            hist[coef] = hist.get(coef, 0) + 1
            if coef != 0 and first is None:
                first = index
            index += 1
        return hist, first

    if threads <= 1 or examined < 2:
        chunks = [scan(0, examined)]
    else:
        size = -(-examined // threads)
        ranges = [
            (lo, min(lo + size, examined)) for lo in range(0, examined, size)
        ]
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda r: scan(*r), ranges))

    for hist, first in chunks:
        for coef, count in hist.items():
            histogram[coef] = histogram.get(coef, 0) + count
        if witness_index is None and first is not None:
            witness_index = first

    witness = orientation_from_index(G, witness_index) if witness_index is not None else None
    return SweepReport(
        examined=examined,
        histogram=dict(sorted(histogram.items())),
        zero_count=histogram.get(0, 0),
        witness_index=witness_index,
        witness=witness,
    )
