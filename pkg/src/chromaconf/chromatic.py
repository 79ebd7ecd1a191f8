"""Chromatic polynomials, Whitney coefficients and their brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import guards
from .errors import DisconnectedGraphError, InputError, VerificationError
from .graph import Graph, connected_components, induced_subgraph, is_connected
from .polynomial import IntPolynomial, falling_factorial

LAMBDA = IntPolynomial([0, 1])

_memo: dict[tuple, IntPolynomial] = {}


def clear_cache() -> None:
    _memo.clear()


def canonical_key(m: int, edges) -> tuple:
    """Relabel by two rounds of degree refinement and return the relabeled edge set.

    Two graphs with equal keys are isomorphic (the key *is* a relabeled copy);
    isomorphic graphs usually, but not always, share a key.
    """
    adj = {v: set() for v in range(1, m + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    color = {v: len(adj[v]) for v in adj}
    for _ in range(2):
        sig = {v: (color[v], tuple(sorted(color[w] for w in adj[v]))) for v in adj}
        palette = {s: k for k, s in enumerate(sorted(set(sig.values())))}
        color = {v: palette[sig[v]] for v in adj}
    order = sorted(adj, key=lambda v: (color[v], v))
    pos = {v: k for k, v in enumerate(order, start=1)}
    return m, tuple(sorted((min(pos[i], pos[j]), max(pos[i], pos[j])) for i, j in edges))


def _split(m: int, edges) -> list[tuple[int, list]]:
    g = Graph(m, frozenset(edges))
    comps = connected_components(g)
    if len(comps) == 1:
        return [(m, list(g.edges))]
    return [(len(c), list(induced_subgraph(g, c).edges)) for c in comps]


def _contract(m: int, edges, u: int, v: int) -> tuple[int, set]:
    """Identify v with u (u < v), relabel to 1..m-1, drop loops and parallel edges."""
    def f(x):
        if x == v:
            x = u
        return x - 1 if x > v else x

    out = set()
    for i, j in edges:
        a, b = f(i), f(j)
        if a != b:
            out.add((a, b) if a < b else (b, a))
    return m - 1, out


def _chrom_connected(m: int, edges) -> IntPolynomial:
    key = canonical_key(m, edges)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    m, edges = key
    e = len(edges)
    full = comb(m, 2)
    if e == full:
        result = falling_factorial(m)
    elif e == m - 1:
        result = LAMBDA * IntPolynomial([-1, 1]) ** (m - 1)
    else:
        deg = [0] * (m + 1)
        for i, j in edges:
            deg[i] += 1
            deg[j] += 1
        leaf = next((v for v in range(1, m + 1) if deg[v] == 1), None)
        if leaf is not None:
            rest = [(i - (i > leaf), j - (j > leaf)) for i, j in edges if leaf not in (i, j)]
            result = IntPolynomial([-1, 1]) * _chrom_connected(m - 1, rest)
        elif 2 * e > full:
            # addition-contraction: chi(G) = chi(G + uv) + chi(G / uv)
            es = set(edges)
            u, v = next((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1) if (i, j) not in es)
            result = _chrom_connected(m, es | {(u, v)}) + _chrom_any(*_contract(m, es, u, v))
        else:
            # deletion-contraction on an edge at a vertex of minimum degree
            v = min(range(1, m + 1), key=lambda x: (deg[x], x))
            u, w = next(ed for ed in edges if v in ed)
            es = set(edges)
            es.discard((u, w))
            result = _chrom_any(m, es) - _chrom_any(*_contract(m, edges, u, w))
    _memo[key] = result
    return result


def _chrom_any(m: int, edges) -> IntPolynomial:
    out = IntPolynomial([1])
    for cm, ce in _split(m, edges):
        out = out * (LAMBDA if cm == 1 else _chrom_connected(cm, ce))
    return out


def chromatic_polynomial(g: Graph) -> IntPolynomial:
    """chi_G(lambda) by memoised deletion/addition-contraction."""
    return _chrom_any(g.m, g.edges)


def count_proper_colorings(g: Graph, lam: int, max_vertices: int | None = None,
                           max_colors: int | None = None) -> int:
    """Exhaustive proper-colouring count, independent of :func:`chromatic_polynomial`.

    Colourings are enumerated up to renaming of colours: vertices are coloured
    in order, a vertex may only open the next unused colour, and each such
    canonical colouring with j colours stands for lam*(lam-1)*...*(lam-j+1)
    actual colourings.
    """
    if lam < 0:
        raise InputError("lambda must be nonnegative")
    guards.check("coloring_vertices", g.m, max_vertices)
    guards.check("coloring_lambda", lam, max_colors)
    earlier = [[]] + [[w for w in g.neighbors(v) if w < v] for v in g.vertices]
    by_used = [0] * (g.m + 2)
    color = [0] * (g.m + 1)

    def assign(v: int, used: int) -> None:
        if v > g.m:
            by_used[used] += 1
            return
        blocked = {color[w] for w in earlier[v]}
        for c in range(1, min(used + 1, lam) + 1):
            if c not in blocked:
                color[v] = c
                assign(v + 1, max(used, c))
        color[v] = 0

    assign(1, 0)
    total = 0
    for j, n in enumerate(by_used):
        if n:
            ways = 1
            for t in range(j):
                ways *= lam - t
            total += n * ways
    return total


@dataclass(frozen=True)
class WhitneyCoefficients:
    """Unsigned coefficients a_1..a_m with chi(lambda) = sum (-1)^(m-i) a_i lambda^i.

    Indexing is 1-based to match the usual notation: ``w[1]`` is a_1.
    """

    m: int
    a: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.m:
            raise IndexError(f"a_{i} undefined for m={self.m}")
        return self.a[i - 1]

    def __iter__(self):
        return iter(self.a)

    @property
    def a1(self) -> int:
        return self.a[0]


def whitney_from_polynomial(chi: IntPolynomial, m: int) -> WhitneyCoefficients:
    a = []
    for i in range(1, m + 1):
        ai = (-1) ** (m - i) * chi.coeff(i)
        if ai < 0:
            raise VerificationError(f"sign alternation violated at lambda^{i}: coefficient {chi.coeff(i)}")
        a.append(ai)
    if chi.coeff(0) != 0 or chi.degree != m:
        raise VerificationError(f"{chi} is not a chromatic polynomial on {m} vertices")
    return WhitneyCoefficients(m, tuple(a))


def whitney_coefficients(g: Graph) -> WhitneyCoefficients:
    if not is_connected(g):
        raise DisconnectedGraphError("Whitney coefficients are defined here for connected graphs")
    return whitney_from_polynomial(chromatic_polynomial(g), g.m)


def _orientation_sources(g: Graph, max_edges: int | None):
    """Yield the source set (bitmask) of every acyclic orientation of ``g``."""
    guards.check("orientation_edges", g.num_edges, max_edges)
    edges = g.sorted_edges
    m = g.m
    for mask in range(1 << len(edges)):
        outs = [0] * (m + 1)
        indeg = [0] * (m + 1)
        for k, (i, j) in enumerate(edges):
            if mask >> k & 1:
                i, j = j, i
            outs[i] |= 1 << j
            indeg[j] += 1
        sources = 0
        for v in range(1, m + 1):
            if indeg[v] == 0:
                sources |= 1 << v
        # Kahn's algorithm
        frontier = [v for v in range(1, m + 1) if indeg[v] == 0]
        seen = 0
        while frontier:
            v = frontier.pop()
            seen += 1
            o = outs[v]
            while o:
                low = o & -o
                w = low.bit_length() - 1
                o ^= low
                indeg[w] -= 1
                if indeg[w] == 0:
                    frontier.append(w)
        if seen == m:
            yield sources


def unique_source_counts(g: Graph, max_edges: int | None = None) -> dict[int, int]:
    """For every vertex v, the number of acyclic orientations whose only source is v."""
    counts = {v: 0 for v in g.vertices}
    for sources in _orientation_sources(g, max_edges):
        if sources & (sources - 1) == 0:
            counts[sources.bit_length() - 1] += 1
    return counts


def count_acyclic_orientations_unique_source(g: Graph, v0: int, max_edges: int | None = None) -> int:
    """Brute force over all 2^|E| orientations."""
    if not 1 <= v0 <= g.m:
        raise InputError(f"vertex {v0} not in 1..{g.m}")
    if not is_connected(g):
        raise DisconnectedGraphError("unique-source orientations need a connected graph")
    target = 1 << v0
    return sum(1 for s in _orientation_sources(g, max_edges) if s == target)
