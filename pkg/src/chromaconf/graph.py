"""Labeled simple graphs on vertices 1..m, constructors and edge orderings."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from .errors import (
    DuplicateEdgeError,
    GraphFormatError,
    InputError,
    LoopError,
    MalformedLineError,
    VertexRangeError,
)

Edge = tuple[int, int]


def _edge(i: int, j: int) -> Edge:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """A simple graph with vertex set ``{1, ..., m}``.

    ``edges`` is normalised to a frozenset of pairs ``(i, j)`` with ``i < j``.
    ``labels`` optionally records the original vertex names of a graph
    produced by relabeling (e.g. :func:`induced_subgraph`); it takes no part
    in equality.
    """

    m: int
    edges: frozenset = frozenset()
    labels: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise InputError(f"a graph needs at least one vertex, got m={self.m!r}")
        normal = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise LoopError(f"loop at vertex {i}")
            if not (1 <= i <= self.m and 1 <= j <= self.m):
                raise VertexRangeError(f"edge {{{i},{j}}} has an endpoint outside 1..{self.m}")
            normal.add(_edge(i, j))
        object.__setattr__(self, "edges", frozenset(normal))
        if self.labels is not None and len(self.labels) != self.m:
            raise InputError("labels must name every vertex")

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(n) for v, n in adj.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, i: int, j: int) -> bool:
        return _edge(i, j) in self.edges

    def __str__(self) -> str:
        body = " ".join(f"{i}-{j}" for i, j in self.sorted_edges)
        return f"Graph(m={self.m}; {body})" if body else f"Graph(m={self.m})"


# ---------------------------------------------------------------- builders

def make_complete(m: int) -> Graph:
    if m < 1:
        raise InputError("complete graph needs m >= 1")
    return Graph(m, frozenset(combinations(range(1, m + 1), 2)))


def make_edgeless(m: int) -> Graph:
    return Graph(m)


def make_cycle(m: int) -> Graph:
    if m < 3:
        raise InputError(f"cycle needs m >= 3, got {m}")
    edges = {(i, i + 1) for i in range(1, m)} | {(1, m)}
    return Graph(m, frozenset(edges))


def make_path(m: int) -> Graph:
    if m < 1:
        raise InputError("path needs m >= 1")
    return Graph(m, frozenset((i, i + 1) for i in range(1, m)))


def make_star(m: int) -> Graph:
    """Star with centre 1 joined to 2..m."""
    if m < 1:
        raise InputError("star needs m >= 1")
    return Graph(m, frozenset((1, j) for j in range(2, m + 1)))


def make_diamond() -> Graph:
    """K4 with the edge {1,4} removed: two triangles sharing the edge {2,3}."""
    return Graph(4, frozenset([(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]))


def box_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (v, w) gets index (v-1)*h.m + w."""
    def idx(v, w):
        return (v - 1) * h.m + w

    edges = set()
    for v in g.vertices:
        for a, b in h.edges:
            edges.add((idx(v, a), idx(v, b)))
    for w in h.vertices:
        for a, b in g.edges:
            edges.add((idx(a, w), idx(b, w)))
    return Graph(g.m * h.m, frozenset(edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = {(i + g.m, j + g.m) for i, j in h.edges}
    return Graph(g.m + h.m, g.edges | shifted)


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    cross = {(i, g.m + j) for i in g.vertices for j in h.vertices}
    return Graph(u.m, u.edges | cross)


def wedge(g: Graph, h: Graph, gv: int = 1, hv: int = 1) -> Graph:
    """One-vertex amalgamation: vertex ``hv`` of ``h`` is glued onto ``gv`` of ``g``."""
    others = [w for w in h.vertices if w != hv]
    new = {w: g.m + k for k, w in enumerate(others, start=1)}
    new[hv] = gv
    edges = set(g.edges) | {_edge(new[a], new[b]) for a, b in h.edges}
    return Graph(g.m + h.m - 1, frozenset(edges))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabeled 1..|s| in increasing order of the
    original labels (kept in ``labels``)."""
    members = sorted(set(s))
    if not members:
        raise InputError("induced subgraph of an empty vertex set")
    for v in members:
        if not 1 <= v <= g.m:
            raise VertexRangeError(f"vertex {v} not in 1..{g.m}")
    pos = {v: k for k, v in enumerate(members, start=1)}
    edges = {(pos[i], pos[j]) for i, j in g.edges if i in pos and j in pos}
    prior = g.labels
    labels = tuple(prior[v - 1] for v in members) if prior else tuple(members)
    return Graph(len(members), frozenset(edges), labels=labels)


def relabel(g: Graph, perm: Mapping[int, int]) -> Graph:
    return Graph(g.m, frozenset(_edge(perm[i], perm[j]) for i, j in g.edges))


# ------------------------------------------------------------ connectivity

def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as vertex sets, sorted by smallest member."""
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        stack, comp = [v], {v}
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.m - 1 and is_connected(g)


def triangle_count(g: Graph) -> int:
    adj = g.adjacency
    return sum(len(adj[i] & adj[j] & set(range(j + 1, g.m + 1))) for i, j in g.edges)


# ----------------------------------------------------------- edge orderings

@dataclass(frozen=True, eq=False)
class EdgeOrdering:
    """A total order on the edges of ``graph``: ``rank_of_edge[e]`` in 1..|E|."""

    graph: Graph
    rank_of_edge: Mapping[Edge, int]

    def __post_init__(self):
        ranks = dict(self.rank_of_edge)
        if set(ranks) != set(self.graph.edges):
            raise InputError("edge ordering must rank exactly the graph's edges")
        if sorted(ranks.values()) != list(range(1, len(ranks) + 1)):
            raise InputError("edge ranks must be a bijection onto 1..|E|")
        object.__setattr__(self, "rank_of_edge", ranks)

    def rank(self, e: Edge) -> int:
        return self.rank_of_edge[_edge(*e)]

    def edges_by_rank(self) -> list[Edge]:
        return sorted(self.rank_of_edge, key=self.rank_of_edge.__getitem__)

    @classmethod
    def from_sequence(cls, g: Graph, seq: Iterable[Edge]) -> "EdgeOrdering":
        return cls(g, {_edge(*e): r for r, e in enumerate(seq, start=1)})


def nbc_edge_ordering(g: Graph) -> EdgeOrdering:
    """Rank edges by decreasing vertex sum: the smallest sum i+j gets rank |E|.

    Among edges with equal sum the one with the larger j gets the smaller rank.
    For K_m this makes the increasing forests exactly the NBC forests.
    """
    walk = sorted(g.edges, key=lambda e: (e[0] + e[1], e[1]))
    n = len(walk)
    return EdgeOrdering(g, {e: n - p for p, e in enumerate(walk)})


def lex_edge_ordering(g: Graph) -> EdgeOrdering:
    return EdgeOrdering.from_sequence(g, g.sorted_edges)


def random_edge_ordering(g: Graph, seed: int | random.Random | None = None) -> EdgeOrdering:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    seq = list(g.sorted_edges)
    rng.shuffle(seq)
    return EdgeOrdering.from_sequence(g, seq)


def edge_ordering(g: Graph, spec: str = "nbc") -> EdgeOrdering:
    """Resolve an ordering name: ``nbc``, ``lex`` or ``random:SEED``."""
    if spec == "nbc":
        return nbc_edge_ordering(g)
    if spec == "lex":
        return lex_edge_ordering(g)
    if spec.startswith("random:"):
        try:
            seed = int(spec.split(":", 1)[1])
        except ValueError:
            raise InputError(f"bad ordering seed in {spec!r}") from None
        return random_edge_ordering(g, seed)
    raise InputError(f"unknown ordering {spec!r}; use nbc, lex or random:SEED")


# ------------------------------------------------------------ text formats

def serialize_graph(g: Graph) -> str:
    lines = [str(g.m)] + [f"{i} {j}" for i, j in g.sorted_edges]
    return "\n".join(lines) + "\n"


def _parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise MalformedLineError("empty graph description")
    lineno, head = rows[0]
    if not re.fullmatch(r"\d+", head):
        raise MalformedLineError(f"line {lineno}: expected vertex count, got {head!r}")
    m = int(head)
    if m < 1:
        raise InputError("a graph needs at least one vertex")
    edges: set[Edge] = set()
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise MalformedLineError(f"line {lineno}: expected 'i j', got {line!r}")
        i, j = int(parts[0]), int(parts[1])
        if not (1 <= i <= m and 1 <= j <= m):
            raise VertexRangeError(f"line {lineno}: vertex out of range 1..{m} in {line!r}")
        if i == j:
            raise LoopError(f"line {lineno}: loop at vertex {i}")
        e = _edge(i, j)
        if e in edges:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {i} {j}")
        edges.add(e)
    return Graph(m, frozenset(edges))


_SIZED = {
    "complete": make_complete,
    "cycle": make_cycle,
    "path": make_path,
    "star": make_star,
    "edgeless": make_edgeless,
}
_BINARY = {"box": box_product, "join": join, "union": disjoint_union}


class _ExprParser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def fail(self, msg: str):
        raise MalformedLineError(f"bad graph expression {self.text!r} at offset {self.pos}: {msg}")

    def name(self) -> str:
        mt = re.compile(r"[a-z]+").match(self.text, self.pos)
        if not mt:
            self.fail("expected a builder name")
        self.pos = mt.end()
        return mt.group()

    def expect(self, ch: str):
        if self.text[self.pos:self.pos + 1] != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def expr(self) -> Graph:
        if self.text[self.pos:self.pos + 1] == "(":
            self.pos += 1
            g = self.expr()
            self.expect(")")
            return g
        word = self.name()
        if word == "diamond":
            return make_diamond()
        if word in _SIZED:
            self.expect(":")
            mt = re.compile(r"\d+").match(self.text, self.pos)
            if not mt:
                self.fail("expected a vertex count")
            self.pos = mt.end()
            return _SIZED[word](int(mt.group()))
        if word in _BINARY:
            self.expect(":")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            return _BINARY[word](left, right)
        self.fail(f"unknown builder {word!r}")

    def parse(self) -> Graph:
        g = self.expr()
        if self.pos != len(self.text):
            self.fail("trailing characters")
        return g


def parse_graph(text: str) -> Graph:
    """Parse an edge list or a builder expression such as ``box:complete:3,complete:2``."""
    stripped = text.strip()
    if stripped and stripped[0].isalpha() or stripped.startswith("("):
        return _ExprParser(stripped).parse()
    return _parse_edge_list(text)


def load_graph(source: str) -> Graph:
    """Graph from a file path if one exists, else from an expression/edge list."""
    path = Path(source)
    try:
        is_file = path.is_file()
    except OSError:
        is_file = False
    if is_file:
        return parse_graph(path.read_text())
    try:
        return parse_graph(source)
    except MalformedLineError:
        if "/" in source or source.endswith(".txt"):
            raise InputError(f"no such graph file: {source}") from None
        raise


__all__ = [
    "Edge", "EdgeOrdering", "Graph", "GraphFormatError",
    "box_product", "connected_components", "disjoint_union", "edge_ordering",
    "induced_subgraph", "is_connected", "is_tree", "join", "lex_edge_ordering",
    "load_graph", "make_complete", "make_cycle", "make_diamond", "make_edgeless",
    "make_path", "make_star", "nbc_edge_ordering", "parse_graph", "random_edge_ordering",
    "relabel", "serialize_graph", "triangle_count", "wedge",
]
