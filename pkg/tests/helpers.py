"""Independent oracles and corpus builders shared across the test suite.

Everything here deliberately avoids the library's own search machinery:
naive subset scans, permutation-based isomorphism, Kahn's algorithm. Slow
but obviously correct, which is the point.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

from wdlab import Graph, Orientation


def is_balanced(arcs) -> bool:
    """Generic Eulerian predicate: in-degree equals out-degree everywhere."""
    bal = Counter()
    for v, w in arcs:
        bal[v] += 1
        bal[w] -= 1
    return all(b == 0 for b in bal.values())


def naive_ee_eo(arcs) -> tuple[int, int]:
    """Even/odd balanced-subset counts by scanning all 2^m subsets."""
    arcs = list(arcs)
    ee = eo = 0
    for r in range(len(arcs) + 1):
        for subset in itertools.combinations(arcs, r):
            if is_balanced(subset):
                if r % 2:
                    eo += 1
                else:
                    ee += 1
    return ee, eo


def is_acyclic(arcs) -> bool:
    """Kahn's algorithm on an arbitrary arc list."""
    arcs = list(arcs)
    verts = {v for a in arcs for v in a}
    indeg = Counter(w for _, w in arcs)
    out = {v: [] for v in verts}
    for v, w in arcs:
        out[v].append(w)
    queue = [v for v in verts if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == len(verts)


def odd_cycle_vertex_sets(G: Graph) -> list[frozenset[int]]:
    """All simple odd cycles of G as vertex sets (fine for n <= 8)."""
    cycles = set()
    verts = list(G.vertices())
    for k in range(3, G.n + 1, 2):
        for subset in itertools.combinations(verts, k):
            anchor, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                ring = (anchor,) + perm
                if all(G.has_edge(ring[i], ring[(i + 1) % k]) for i in range(k)):
                    cycles.add(frozenset(subset))
                    break
    return sorted(cycles, key=sorted)


def random_orientation(rng: random.Random, n_min: int = 2, n_max: int = 5,
                       arc_cap: int | None = None) -> Orientation:
    """Random simple digraph: each vertex pair absent or oriented either way."""
    n = rng.randint(n_min, n_max)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    arcs = set()
    for u, v in pairs:
        if arc_cap is not None and len(arcs) >= arc_cap:
            break
        roll = rng.random()
        if roll < 1 / 3:
            arcs.add((u, v))
        elif roll < 2 / 3:
            arcs.add((v, u))
    return Orientation(n, frozenset(arcs))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.of(n, edges)


def random_lists(rng: random.Random, D: Orientation, hi: int = 50) -> dict[int, list[int]]:
    """Per-vertex distinct positive values, list size out-degree + 1."""
    return {
        v: sorted(rng.sample(range(1, hi + 1), D.out_degree(v) + 1))
        for v in D.vertices()
    }


def path_graph(n: int) -> Graph:
    return Graph.of(n, [(i, i + 1) for i in range(1, n)])


def canonical_form(n: int, edges) -> tuple:
    """Isomorphism-invariant key by minimizing over vertex permutations."""
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        mapped = tuple(
            sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in edges)
        )
        if best is None or mapped < best:
            best = mapped
    return (n, best)


def is_connected(n: int, edges) -> bool:
    if n <= 1:
        return True
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for x in adj[u]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return len(seen) == n


def connected_graphs_up_to(n_max: int) -> list[Graph]:
    """One representative per connected isomorphism class, 1..n_max vertices."""
    reps: dict[tuple, Graph] = {}
    for n in range(1, n_max + 1):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if not is_connected(n, edges):
                continue
            key = canonical_form(n, edges)
            if key not in reps:
                reps[key] = Graph.of(n, edges)
    return [reps[k] for k in sorted(reps)]
