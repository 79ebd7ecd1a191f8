"""Spanning forests, broken circuits and NBC forests."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator

from . import guards
from .errors import InputError
from .graph import Edge, EdgeOrdering, Graph, make_complete


@dataclass(frozen=True)
class Forest:
    """An acyclic edge subset of ``graph``; isolated vertices count as trees."""

    graph: Graph
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if not set(self.edges) <= self.graph.edges:
            raise InputError("forest uses edges outside its graph")
        if len(self.blocks) != self.graph.m - len(self.edges):
            raise InputError("edge set contains a cycle")

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def component_count(self) -> int:
        return self.graph.m - len(self.edges)

    @cached_property
    def blocks(self) -> tuple[frozenset[int], ...]:
        """Vertex sets of the trees, sorted by smallest member."""
        parent = list(range(self.graph.m + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            parent[find(i)] = find(j)
        groups: dict[int, set[int]] = {}
        for v in self.graph.vertices:
            groups.setdefault(find(v), set()).add(v)
        return tuple(sorted((frozenset(b) for b in groups.values()), key=min))

    def to_json(self) -> list[list[int]]:
        return [list(e) for e in self.edges]


class _RollbackDSU:
    """Union-find with union by size and undo, no path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.history: list[tuple[int, int] | None] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb))
        return True

    def undo(self) -> None:
        ra, rb = self.history.pop()
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.m:
        raise InputError(f"component count k={k} outside 1..{g.m}")


def _acyclic_subsets(g: Graph, size: int | None, accept=None) -> Iterator[tuple[Edge, ...]]:
    """Acyclic edge subsets in lexicographic order of their sorted edge lists.

    ``size`` fixes the number of edges (None = all sizes).  ``accept(chosen)``
    may prune a branch; it must be hereditary (closed under subsets).
    """
    edges = g.sorted_edges
    n = len(edges)
    dsu = _RollbackDSU(g.m)
    chosen: list[Edge] = []

    def rec(start: int):
        if size is None or len(chosen) == size:
            yield tuple(chosen)
            if size is not None:
                return
        if size is not None and n - start < size - len(chosen):
            return
        for idx in range(start, n):
            i, j = edges[idx]
            if not dsu.union(i, j):
                continue
            chosen.append(edges[idx])
            if accept is None or accept(chosen):
                yield from rec(idx + 1)
            chosen.pop()
            dsu.undo()

    yield from rec(0)


def enumerate_spanning_forests(g: Graph, k: int, max_edges: int | None = None) -> list[Forest]:
    _check_k(g, k)
    guards.check("forest_edges", g.num_edges, max_edges)
    return [Forest(g, es) for es in _acyclic_subsets(g, g.m - k)]


def _forest_path(adj: dict[int, list[int]], a: int, b: int) -> list[tuple[int, int]] | None:
    """Edges on the unique a-b path of a forest given as adjacency lists."""
    prev = {a: None}
    stack = [a]
    while stack:
        u = stack.pop()
        if u == b:
            break
        for w in adj.get(u, ()):
            if w not in prev:
                prev[w] = u
                stack.append(w)
    if b not in prev:
        return None
    path = []
    while prev[b] is not None:
        p = prev[b]
        path.append((p, b) if p < b else (b, p))
        b = p
    return path


def _has_broken_circuit(g: Graph, edge_set, rank) -> bool:
    adj: dict[int, list[int]] = {}
    for i, j in edge_set:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    inside = set(edge_set)
    for e in g.edges:
        if e in inside or e[0] not in adj or e[1] not in adj:
            continue
        path = _forest_path(adj, e[0], e[1])
        if path is not None and rank[e] > max(rank[p] for p in path):
            return True
    return False


def contains_broken_cycle(f: Forest, ord: EdgeOrdering) -> bool:
    """True iff some edge outside ``f`` closes a cycle in which it has the top rank."""
    if ord.graph != f.graph:
        raise InputError("forest and edge ordering refer to different graphs")
    return _has_broken_circuit(f.graph, f.edges, ord.rank_of_edge)


def iter_nbc_forests(g: Graph, ord: EdgeOrdering, size: int | None = None) -> Iterator[tuple[Edge, ...]]:
    """NBC edge sets; branches are cut as soon as a broken circuit appears."""
    if ord.graph != g:
        raise InputError("edge ordering belongs to a different graph")
    rank = ord.rank_of_edge
    return _acyclic_subsets(g, size, accept=lambda chosen: not _has_broken_circuit(g, chosen, rank))


def nbc_forests(g: Graph, ord: EdgeOrdering, k: int, max_edges: int | None = None) -> list[Forest]:
    _check_k(g, k)
    guards.check("forest_edges", g.num_edges, max_edges)
    return [Forest(g, es) for es in iter_nbc_forests(g, ord, g.m - k)]


def nbc_forest_counts(g: Graph, ord: EdgeOrdering, max_edges: int | None = None) -> list[int]:
    """``counts[s]`` = number of NBC forests with s edges, s = 0..m-1."""
    guards.check("forest_edges", g.num_edges, max_edges)
    counts = [0] * g.m
    for es in iter_nbc_forests(g, ord):
        counts[len(es)] += 1
    return counts


def increasing_forests_complete(m: int, k: int, max_vertices: int | None = None) -> list[Forest]:
    """Spanning forests of K_m with k trees in which labels increase away from each root.

    Every vertex v > 1 either starts a new tree or hangs below a smaller vertex.
    """
    guards.check("increasing_vertices", m, max_vertices)
    g = make_complete(m)
    _check_k(g, k)
    out = []
    choices = [range(0, v) for v in range(2, m + 1)]  # 0 = new root
    for parents in product(*choices):
        if m - sum(1 for p in parents if p) != k:
            continue
        edges = [(p, v) for v, p in zip(range(2, m + 1), parents) if p]
        out.append(Forest(g, tuple(edges)))
    out.sort(key=lambda f: f.edges)
    return out
