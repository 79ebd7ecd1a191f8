"""Poincare polynomials of chromatic configuration spaces Conf_G(R^N).

Series are stored in the variable x = t^(N-1); three independent routes
compute them: from the chromatic polynomial, by counting NBC forests, and
from interval homology of the bond lattice (Goresky-MacPherson).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

from . import guards
from .bond_lattice import BondLattice
from .chromatic import chromatic_polynomial, whitney_coefficients
from .errors import InputError, VerificationError
from .forests import Forest, iter_nbc_forests, nbc_forests
from .graph import EdgeOrdering, Graph, connected_components, induced_subgraph, is_connected
from .polynomial import IntPolynomial, product
from .simplicial import interval_homology

log = logging.getLogger(__name__)

ONE = IntPolynomial([1])


@dataclass(frozen=True)
class PoincareSeries:
    """``base`` is a polynomial in x; the Poincare polynomial is base(t^(N-1))."""

    base: IntPolynomial
    N: int

    def __post_init__(self):
        if self.N < 2:
            raise InputError(f"N must be >= 2, got {self.N}")

    def t_coefficients(self) -> dict[int, int]:
        return {j * (self.N - 1): c for j, c in enumerate(self.base.coefficients) if c}

    def betti(self, i: int) -> int:
        q, r = divmod(i, self.N - 1)
        return self.base.coeff(q) if r == 0 and i >= 0 else 0

    def at_t(self, t):
        return self.base(t ** (self.N - 1))

    def total_rank(self) -> int:
        return sum(self.base.coefficients)

    def pretty(self, symbolic: bool = False) -> str:
        n1 = self.N - 1

        def power(j):
            if j == 0:
                return ""
            if symbolic:
                return "t^{N-1}" if j == 1 else f"t^{{{j}(N-1)}}"
            e = j * n1
            return "t" if e == 1 else f"t^{e}"

        return self.base.format(ascending=True, power=power)

    def __str__(self):
        return self.pretty()

    def to_json(self) -> dict:
        tc = self.t_coefficients()
        return {
            "N": self.N,
            "x_coefficients": [str(c) for c in self.base.coefficients],
            "t_degrees": sorted(tc),
            "betti": {str(d): str(r) for d, r in sorted(tc.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "PoincareSeries":
        return cls(IntPolynomial(int(c) for c in data["x_coefficients"]), int(data["N"]))


def _check_N(N: int) -> None:
    if not isinstance(N, int) or N < 2:
        raise InputError(f"the Euclidean dimension N must be an integer >= 2, got {N!r}")


def _per_component(g: Graph, connected_route) -> IntPolynomial:
    comps = connected_components(g)
    if len(comps) == 1:
        return connected_route(g)
    return product([connected_route(induced_subgraph(g, c)) for c in comps])


def poincare_from_chromatic(g: Graph, N: int) -> PoincareSeries:
    """base(x) = sum_i a_i x^(m-i), read off the Whitney coefficients."""
    _check_N(N)

    def route(h: Graph) -> IntPolynomial:
        w = whitney_coefficients(h)
        return IntPolynomial([w[h.m - j] for j in range(h.m)])

    return PoincareSeries(_per_component(g, route), N)


def poincare_from_nbc(g: Graph, ord: EdgeOrdering, N: int, max_edges: int | None = None) -> PoincareSeries:
    """base(x) = sum over NBC forests F of x^|F|, for the given edge ordering."""
    _check_N(N)
    guards.check("forest_edges", g.num_edges, max_edges)
    counts = [0] * g.m
    for es in iter_nbc_forests(g, ord):
        counts[len(es)] += 1
    return PoincareSeries(IntPolynomial(counts), N)


def gm_t_coefficients(g: Graph, N: int, max_vertices: int | None = None) -> dict[int, int]:
    """Betti numbers of Conf_G(R^N) by t-degree, from bond-lattice interval homology.

    Each x above the bottom, with k blocks, contributes its reduced homology
    in degree d to cohomological degree codim(x) - 2 - d, codim(x) = (m - k) N.
    """
    _check_N(N)
    guards.check("gm_vertices", g.m, max_vertices)
    if not is_connected(g):
        raise InputError("gm_t_coefficients needs a connected graph")
    lat = BondLattice(g, max_vertices=max(g.m, guards.GUARDS.lattice_vertices))
    m = g.m
    out = {0: 1}
    for k, x in enumerate(lat.elements):
        if k == 0:
            continue
        codim = m * N - x.dimension(N)
        for d, rank in interval_homology(lat, k).nonzero().items():
            i = codim - 2 - d
            out[i] = out.get(i, 0) + rank
    return dict(sorted(out.items()))


def poincare_from_gm(g: Graph, N: int, max_vertices: int | None = None) -> PoincareSeries:
    _check_N(N)

    def route(h: Graph) -> IntPolynomial:
        tc = gm_t_coefficients(h, N, max_vertices)
        coeffs = [0] * (max(tc) // (N - 1) + 1)
        for i, r in tc.items():
            q, rem = divmod(i, N - 1)
            if rem or i < 0:
                raise VerificationError(f"homology in degree {i}, not a multiple of N-1={N - 1}")
            coeffs[q] += r
        return IntPolynomial(coeffs)

    return PoincareSeries(_per_component(g, route), N)


def reciprocity_t_coefficients(g: Graph, N: int) -> dict[int, int]:
    """Expand (-1)^m t^(m(N-1)) chi_G(-t^(1-N)) symbolically with Laurent terms."""
    import sympy

    _check_N(N)
    t, lam = sympy.symbols("t lam")
    chi = chromatic_polynomial(g)
    chi_expr = sum(c * lam ** i for i, c in enumerate(chi.coefficients))
    expr = (-1) ** g.m * t ** (g.m * (N - 1)) * chi_expr.subs(lam, -t ** (1 - N))
    expr = sympy.expand(sympy.simplify(expr))
    poly = sympy.Poly(expr, t)
    return {int(mon[0]): int(c) for mon, c in zip(poly.monoms(), poly.coeffs()) if c}


def betti(g: Graph, N: int, i: int) -> int:
    return poincare_from_chromatic(g, N).betti(i)


def euler_characteristic(g: Graph, N: int) -> int:
    """P_t(-1), cross-checked against (-1)^(N m) chi_G((-1)^N)."""
    value = poincare_from_chromatic(g, N).at_t(-1)
    expected = (-1) ** (N * g.m) * chromatic_polynomial(g)((-1) ** N)
    if value != expected:
        raise VerificationError(f"Euler characteristic {value} != {expected} from the chromatic polynomial")
    return value


def nbc_basis(g: Graph, ord: EdgeOrdering, N: int, degree: int) -> list[Forest]:
    """NBC spanning forests labelling a basis of H_degree(Conf_G(R^N))."""
    _check_N(N)
    q, r = divmod(degree, N - 1)
    if r or degree < 0:
        log.info("degree %d is not a nonnegative multiple of N-1=%d; the homology vanishes", degree, N - 1)
        return []
    k = g.m - q
    if k < 1:
        log.info("degree %d exceeds the top degree %d", degree, (g.m - 1) * (N - 1))
        return []
    return nbc_forests(g, ord, k)


class WedgeSummand(NamedTuple):
    sphere_dim: int
    multiplicity: int


def stable_splitting_summary(g: Graph, N: int) -> list[WedgeSummand]:
    """Spheres and multiplicities in the stable splitting of Conf_G(R^N)_+, top first."""
    base = poincare_from_chromatic(g, N).base
    return [WedgeSummand(j * (N - 1), base.coeff(j))
            for j in range(base.degree, -1, -1) if base.coeff(j)]
