"""Graph families for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from chromaconf.graph import Graph, is_connected


def all_labeled_graphs(m: int):
    pairs = list(combinations(range(1, m + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(m, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def connected_labeled_graphs(m: int):
    return [g for g in all_labeled_graphs(m) if is_connected(g)]


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes)
    pos = {v: k for k, v in enumerate(nodes, start=1)}
    return Graph(len(nodes), frozenset((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in h.edges))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def atlas_connected(max_m: int, min_m: int = 1):
    """One graph per isomorphism class, 1 <= m <= 7 (networkx graph atlas)."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if min_m <= n <= max_m and nx.is_connected(h):
            out.append(from_nx(h))
    return out


def random_tree(rng: random.Random, m: int) -> Graph:
    edges = {(min(v, u), max(v, u)) for v in range(2, m + 1) for u in [rng.randint(1, v - 1)]}
    perm = list(range(1, m + 1))
    rng.shuffle(perm)
    return Graph(m, frozenset((min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1])) for i, j in edges))


def random_connected(rng: random.Random, m: int, max_edges: int | None = None) -> Graph:
    """A random spanning tree plus a uniformly random number of extra edges."""
    tree = random_tree(rng, m)
    extra = [e for e in combinations(range(1, m + 1), 2) if e not in tree.edges]
    rng.shuffle(extra)
    room = len(extra) if max_edges is None else max(0, min(len(extra), max_edges - (m - 1)))
    return Graph(m, tree.edges | frozenset(extra[:rng.randint(0, room)]))


def connected_up_to_iso(m: int, max_edges: int) -> list[Graph]:
    """Every connected graph on m vertices with at most max_edges edges, one per isomorphism class.

    Each such graph is a spanning tree plus extra edges, so extending every
    non-isomorphic tree by every small set of non-edges reaches all classes.
    """
    if m == 1:
        return [Graph(1)]
    buckets: dict[tuple, list[nx.Graph]] = {}
    out = []
    for tree in nx.nonisomorphic_trees(m):
        base = {(min(a, b) + 1, max(a, b) + 1) for a, b in tree.edges}
        free = [e for e in combinations(range(1, m + 1), 2) if e not in base]
        for extra in range(0, max_edges - (m - 1) + 1):
            for add in combinations(free, extra):
                g = Graph(m, frozenset(base) | frozenset(add))
                h = to_nx(g)
                key = (g.num_edges, tuple(sorted((h.degree(v), tuple(sorted(h.degree(w) for w in h[v])))
                                                 for v in h)))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, other) for other in bucket):
                    continue
                bucket.append(h)
                out.append(g)
    return out
