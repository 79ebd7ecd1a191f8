"""The bond lattice of a graph: connected set partitions ordered by coarsening."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from . import guards
from .errors import DisconnectedGraphError, InputError
from .graph import Graph, induced_subgraph, is_connected
from .polynomial import IntPolynomial
from .poset import Poset


@dataclass(frozen=True)
class BondPartition:
    """Blocks sorted by size, then by smallest member; each block sorted."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "BondPartition":
        bs = [tuple(sorted(b)) for b in blocks]
        if any(not b for b in bs):
            raise InputError("empty block")
        bs.sort(key=lambda b: (len(b), b[0]))
        return cls(tuple(bs))

    @classmethod
    def parse(cls, text: str) -> "BondPartition":
        """Inverse of ``str``: ``"3|12|45"`` or ``"3|1,2|10,11"``."""
        blocks = []
        for part in text.split("|"):
            part = part.strip()
            if "," in part:
                blocks.append([int(x) for x in part.split(",")])
            else:
                blocks.append([int(ch) for ch in part])
        return cls.of(blocks)

    @property
    def length(self) -> int:
        return len(self.blocks)

    def rank(self, m: int | None = None) -> int:
        if m is None:
            m = sum(len(b) for b in self.blocks)
        return m - self.length

    def dimension(self, N: int) -> int:
        """Dimension of the matching diagonal subspace of (R^N)^m."""
        return self.length * N

    @cached_property
    def block_of(self) -> dict[int, int]:
        return {v: k for k, b in enumerate(self.blocks) for v in b}

    def refines(self, other: "BondPartition") -> bool:
        """``self <= other``: every block of self sits inside a block of other."""
        where = other.block_of
        return all(len({where[v] for v in b}) == 1 for b in self.blocks)

    def __str__(self) -> str:
        wide = any(v >= 10 for b in self.blocks for v in b)
        sep = "," if wide else ""
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def is_valid_for(self, g: Graph) -> bool:
        seen = sorted(v for b in self.blocks for v in b)
        if seen != list(g.vertices):
            return False
        return all(is_connected(induced_subgraph(g, b)) for b in self.blocks)


class BondLattice:
    """All bond partitions of a connected graph with their covering relation.

    Elements are indexed in order of increasing rank, ties broken by the
    canonical string.  ``bottom`` is 1|2|...|m and ``top`` the one-block partition.
    """

    def __init__(self, graph: Graph, max_vertices: int | None = None):
        guards.check("lattice_vertices", graph.m, max_vertices)
        if not is_connected(graph):
            raise DisconnectedGraphError("bond lattice needs a connected graph (no top element otherwise)")
        self.graph = graph
        m = graph.m
        bottom = BondPartition.of([v] for v in graph.vertices)
        found = {bottom: set()}
        queue = deque([bottom])
        edges = graph.sorted_edges
        while queue:
            x = queue.popleft()
            where = x.block_of
            for i, j in edges:
                bi, bj = where[i], where[j]
                if bi == bj:
                    continue
                merged = [b for k, b in enumerate(x.blocks) if k not in (bi, bj)]
                merged.append(x.blocks[bi] + x.blocks[bj])
                y = BondPartition.of(merged)
                if y not in found:
                    found[y] = set()
                    queue.append(y)
                found[x].add(y)
        self.elements: list[BondPartition] = sorted(found, key=lambda p: (p.rank(m), str(p)))
        self.index = {p: k for k, p in enumerate(self.elements)}
        self.up_covers: list[tuple[int, ...]] = [
            tuple(sorted(self.index[y] for y in found[x])) for x in self.elements
        ]
        down: list[list[int]] = [[] for _ in self.elements]
        for k, ups in enumerate(self.up_covers):
            for u in ups:
                down[u].append(k)
        self.down_covers: list[tuple[int, ...]] = [tuple(sorted(d)) for d in down]
        self.bottom = self.elements[0]
        self.top = self.elements[-1]
        self._mu: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    @property
    def m(self) -> int:
        return self.graph.m

    def _idx(self, x: BondPartition | int) -> int:
        if isinstance(x, int):
            return x
        try:
            return self.index[x]
        except KeyError:
            raise InputError(f"{x} is not a bond partition of this graph") from None

    def leq(self, x, y) -> bool:
        return self.elements[self._idx(x)].refines(self.elements[self._idx(y)])

    def rank(self, x) -> int:
        return self.elements[self._idx(x)].rank(self.m)

    def counts_by_length(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.elements:
            out[p.length] = out.get(p.length, 0) + 1
        return dict(sorted(out.items()))

    def closed_interval(self, x, y) -> list[int]:
        """Indices z with x <= z <= y, in lattice order."""
        xi, yi = self._idx(x), self._idx(y)
        target = self.elements[yi]
        if not self.elements[xi].refines(target):
            return []
        seen = {xi}
        queue = deque([xi])
        while queue:
            z = queue.popleft()
            for u in self.up_covers[z]:
                if u not in seen and self.elements[u].refines(target):
                    seen.add(u)
                    queue.append(u)
        return sorted(seen)

    def _sweep(self, xi: int, yi: int) -> None:
        """Fill mu(x, z) for every z in [x, y] by the defining recursion."""
        members = self.closed_interval(xi, yi)
        elems = self.elements
        done = []
        for z in members:
            if z == xi:
                val = 1
            else:
                ez = elems[z]
                val = -sum(self._mu[(xi, w)] for w in done if elems[w].refines(ez))
            self._mu[(xi, z)] = val
            done.append(z)

    def mobius(self, x, y) -> int:
        xi, yi = self._idx(x), self._idx(y)
        if not self.elements[xi].refines(self.elements[yi]):
            raise InputError(f"mobius({self.elements[xi]}, {self.elements[yi]}) needs x <= y")
        key = (xi, yi)
        if key not in self._mu:
            self._sweep(xi, yi)
        return self._mu[key]

    def lower_interval(self, x) -> Poset:
        """The open interval (bottom, x) as a poset labeled by partitions."""
        xi = self._idx(x)
        if xi == 0:
            raise InputError("the lower interval needs x above the bottom element")
        inner = [z for z in self.closed_interval(0, xi) if z not in (0, xi)]
        labels = [self.elements[z] for z in inner]
        return Poset.from_leq(labels, lambda a, b: a.refines(b))

    def interval_product_decomposition(self, x) -> list[tuple[tuple[int, ...], Graph]]:
        """[bottom, x] is the product of the bond lattices of the blocks' induced graphs."""
        p = self.elements[self._idx(x)]
        return [(b, induced_subgraph(self.graph, b)) for b in p.blocks]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "elements": [str(p) for p in self.elements],
            "covers": [[k, u] for k, ups in enumerate(self.up_covers) for u in ups],
            "counts_by_length": {str(k): v for k, v in self.counts_by_length().items()},
        }


def build_bond_lattice(g: Graph, max_vertices: int | None = None) -> BondLattice:
    return BondLattice(g, max_vertices)


def mobius(lat: BondLattice, x, y) -> int:
    return lat.mobius(x, y)


def rota_characteristic_polynomial(lat: BondLattice) -> IntPolynomial:
    """Sum over x of mu(bottom, x) * lambda^length(x)."""
    coeffs = [0] * (lat.m + 1)
    for x in lat.elements:
        coeffs[x.length] += lat.mobius(lat.bottom, x)
    return IntPolynomial(coeffs)


def lower_interval(lat: BondLattice, x) -> Poset:
    return lat.lower_interval(x)


def interval_product_decomposition(lat: BondLattice, x):
    return lat.interval_product_decomposition(x)
