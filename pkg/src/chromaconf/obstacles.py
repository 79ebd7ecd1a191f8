"""Configuration spaces of moving points that avoid fixed obstacles.

n points x_1..x_n move in R^N; ``collide`` lists pairs {i, j} that must stay
distinct and ``avoid`` lists pairs (k, s) with x_k kept off obstacle p_s.
The space is the fibre of Conf_G(R^N) -> Conf_r(R^N) for the graph G(n, r)
built below, so its Poincare series is a quotient of two chromatic ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import InputError, VerificationError
from .graph import Graph, connected_components, induced_subgraph, make_complete
from .poincare import PoincareSeries, poincare_from_chromatic
from .polynomial import IntPolynomial, product


@dataclass(frozen=True)
class ObstacleSpec:
    n: int
    r: int
    collide: frozenset = frozenset()
    avoid: frozenset = frozenset()

    def __post_init__(self):
        if self.r == 0:
            raise InputError("r=0 leaves no obstacles; this is plain Conf_G, use the poincare verb with --graph")
        if self.n < 1 or self.r < 1:
            raise InputError(f"need n >= 1 moving points and r >= 1 obstacles, got n={self.n}, r={self.r}")
        c = set()
        for pair in self.collide:
            i, j = pair
            if i == j or not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"collision pair {{{i},{j}}} must be two distinct indices in 1..{self.n}")
            c.add((min(i, j), max(i, j)))
        o = set()
        for k, s in self.avoid:
            if not (1 <= k <= self.n and 1 <= s <= self.r):
                raise InputError(f"avoidance pair ({k},{s}) outside [{self.n}]x[{self.r}]")
            o.add((k, s))
        object.__setattr__(self, "collide", frozenset(c))
        object.__setattr__(self, "avoid", frozenset(o))

    @classmethod
    def full_avoidance(cls, n: int, r: int) -> "ObstacleSpec":
        """Pairwise distinct points avoiding every obstacle: Conf_n(R^N minus r points)."""
        return cls(n, r, frozenset(combinations(range(1, n + 1), 2)),
                   frozenset((k, s) for k in range(1, n + 1) for s in range(1, r + 1)))

    @classmethod
    def diagonal(cls, n: int) -> "ObstacleSpec":
        """Pairwise distinct points with x_i kept off p_i only."""
        return cls(n, n, frozenset(combinations(range(1, n + 1), 2)),
                   frozenset((i, i) for i in range(1, n + 1)))

    @classmethod
    def from_json(cls, data: dict) -> "ObstacleSpec":
        try:
            return cls(int(data["n"]), int(data["r"]),
                       frozenset(tuple(p) for p in data.get("collide", [])),
                       frozenset(tuple(p) for p in data.get("avoid", [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed obstacle spec: {exc}") from None

    @classmethod
    def load(cls, path: str | Path) -> "ObstacleSpec":
        try:
            data = json.loads(Path(path).read_text())
        except OSError as exc:
            raise InputError(f"cannot read obstacle spec: {exc}") from None
        except json.JSONDecodeError as exc:
            raise InputError(f"obstacle spec is not valid JSON: {exc}") from None
        return cls.from_json(data)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r,
                "collide": [list(p) for p in sorted(self.collide)],
                "avoid": [list(p) for p in sorted(self.avoid)]}

    @property
    def obstacle_vertices(self) -> range:
        return range(self.n + 1, self.n + self.r + 1)


def build_gamma(spec: ObstacleSpec) -> Graph:
    """Vertices 1..n are movers, n+1..n+r obstacles; the obstacles span a clique."""
    n = spec.n
    edges = set(spec.collide)
    edges |= {(k, n + s) for k, s in spec.avoid}
    edges |= set(combinations(spec.obstacle_vertices, 2))
    return Graph(n + spec.r, frozenset(edges))


def is_relatively_complete(g: Graph, h_vertices) -> bool:
    """True iff any outside vertex adjacent to r, s in H forces the edge {r, s}."""
    h = set(h_vertices)
    for v in h:
        if not 1 <= v <= g.m:
            raise InputError(f"vertex {v} not in 1..{g.m}")
    for v in g.vertices:
        if v in h:
            continue
        inside = sorted(g.neighbors(v) & h)
        for a, b in combinations(inside, 2):
            if not g.has_edge(a, b):
                return False
    return True


def gamma_poincare(spec: ObstacleSpec, N: int) -> PoincareSeries:
    return poincare_from_chromatic(build_gamma(spec), N)


def obstacle_poincare(spec: ObstacleSpec, N: int) -> PoincareSeries:
    """P(Conf_{C,O}) = P(Conf_{G(n,r)}) / P(Conf_r), divided exactly in x.

    Only the component of G(n, r) holding the obstacle clique is divided;
    the other components multiply back in unchanged.
    """
    g = build_gamma(spec)
    clique = set(spec.obstacle_vertices)
    if not is_relatively_complete(g, clique):
        raise VerificationError("obstacle clique is not relatively complete")
    parts = []
    for comp in connected_components(g):
        sub = poincare_from_chromatic(induced_subgraph(g, comp), N).base
        if clique <= comp:
            denom = poincare_from_chromatic(make_complete(spec.r), N).base
            sub = sub.exact_div(denom)
            if any(c < 0 for c in sub.coefficients):
                raise VerificationError(f"quotient {sub} has a negative coefficient")
        parts.append(sub)
    return PoincareSeries(product(parts), N)


def full_avoidance_closed_form(n: int, r: int) -> IntPolynomial:
    """prod_{j=0}^{n-1} (1 + (r + j) x)."""
    return product([IntPolynomial([1, r + j]) for j in range(n)])


def summary(spec: ObstacleSpec, series: PoincareSeries) -> str:
    ranks = ", ".join(f"b_{d}={r}" for d, r in series.t_coefficients().items())
    return f"{spec.n} movers, {spec.r} obstacles, Betti: {ranks}"
