import random
from math import comb

import pytest
import sympy

from chromaconf.chromatic import chromatic_polynomial
from chromaconf.errors import InputError
from chromaconf.graph import (
    Graph,
    box_product,
    disjoint_union,
    make_complete,
    make_cycle,
    make_diamond,
    make_path,
    make_star,
    nbc_edge_ordering,
    random_edge_ordering,
    triangle_count,
)
from chromaconf.polynomial import IntPolynomial
from chromaconf.poincare import (
    PoincareSeries,
    betti,
    euler_characteristic,
    gm_t_coefficients,
    nbc_basis,
    poincare_from_chromatic,
    poincare_from_gm,
    poincare_from_nbc,
    reciprocity_t_coefficients,
    stable_splitting_summary,
)

from graphgen import random_connected

DIAMOND = IntPolynomial([1, 5, 8, 4])


def sympy_series(g, N):
    """Evaluate (-1)^m t^(m(N-1)) chi(-t^(1-N)) directly, without the Whitney route."""
    t = sympy.Symbol("t")
    chi = chromatic_polynomial(g)
    val = sum(c * (-t ** (1 - N)) ** i for i, c in enumerate(chi.coefficients))
    expr = sympy.expand((-1) ** g.m * t ** (g.m * (N - 1)) * val)
    return {int(k[0]): int(v) for k, v in sympy.Poly(expr, t).terms()}


@pytest.mark.parametrize("N", [2, 3, 4])
def test_diamond_all_routes(N):
    g = make_diamond()
    assert poincare_from_chromatic(g, N).base == DIAMOND
    assert poincare_from_nbc(g, nbc_edge_ordering(g), N).base == DIAMOND
    assert poincare_from_gm(g, N).base == DIAMOND


def test_series_degrees():
    p = PoincareSeries(DIAMOND, 3)
    assert p.t_coefficients() == {0: 1, 2: 5, 4: 8, 6: 4}
    assert p.betti(4) == 8 and p.betti(3) == 0 and p.betti(-2) == 0
    assert p.total_rank() == 18
    assert p.at_t(1) == 18


def test_pretty():
    assert PoincareSeries(IntPolynomial([1, 4, 6, 3]), 3).pretty() == "1 + 4t^2 + 6t^4 + 3t^6"
    assert PoincareSeries(IntPolynomial([1, 3, 2]), 2).pretty() == "1 + 3t + 2t^2"
    assert PoincareSeries(IntPolynomial([1, 5, 8]), 4).pretty(symbolic=True) == "1 + 5t^{N-1} + 8t^{2(N-1)}"


def test_json_round_trip():
    p = poincare_from_chromatic(make_complete(7), 3)
    data = p.to_json()
    assert data["betti"]["2"] == "21"
    assert PoincareSeries.from_json(data) == p


def test_rejects_small_N():
    with pytest.raises(InputError):
        poincare_from_chromatic(make_diamond(), 1)
    with pytest.raises(InputError):
        PoincareSeries(DIAMOND, 1)


@pytest.mark.parametrize("N", [2, 3, 5])
def test_chromatic_route_matches_direct_expansion(N):
    rng = random.Random(N)
    for _ in range(10):
        g = random_connected(rng, rng.randint(2, 8))
        assert poincare_from_chromatic(g, N).t_coefficients() == sympy_series(g, N)
        assert reciprocity_t_coefficients(g, N) == sympy_series(g, N)


def test_complete_graph_product_formula():
    for m in range(1, 9):
        expected = IntPolynomial([1])
        for j in range(1, m):
            expected = expected * IntPolynomial([1, j])
        assert poincare_from_chromatic(make_complete(m), 2).base == expected


def test_tree_and_cycle_closed_forms():
    x = IntPolynomial([0, 1])
    for m in range(3, 9):
        assert poincare_from_chromatic(make_cycle(m), 2).base == (x + 1) ** m - x ** (m - 1) - x ** m
        assert poincare_from_chromatic(make_star(m), 2).base == (x + 1) ** (m - 1)


def test_disconnected_graphs_multiply():
    g = disjoint_union(make_cycle(4), make_complete(3))
    expected = poincare_from_chromatic(make_cycle(4), 3).base * poincare_from_chromatic(make_complete(3), 3).base
    assert poincare_from_chromatic(g, 3).base == expected
    assert poincare_from_gm(g, 3).base == expected
    assert poincare_from_nbc(g, nbc_edge_ordering(g), 3).base == expected
    assert poincare_from_chromatic(Graph(3), 2).base == IntPolynomial([1])


def test_gm_degrees_land_on_multiples_of_N_minus_one():
    tc = gm_t_coefficients(make_cycle(5), 4)
    assert all(d % 3 == 0 for d in tc)
    assert tc == {0: 1, 3: 5, 6: 10, 9: 10, 12: 4}


def test_gm_needs_connected():
    with pytest.raises(InputError):
        gm_t_coefficients(Graph(2), 2)


def test_nbc_ordering_independence():
    g = box_product(make_complete(3), make_complete(2))
    base = poincare_from_chromatic(g, 2).base
    for seed in range(10):
        assert poincare_from_nbc(g, random_edge_ordering(g, seed), 2).base == base


def test_beta_identities():
    for g in (make_diamond(), make_complete(6), box_product(make_cycle(4), make_path(2))):
        for N in (2, 3):
            assert betti(g, N, N - 1) == g.num_edges
            assert betti(g, N, 2 * (N - 1)) == comb(g.num_edges, 2) - triangle_count(g)


def test_euler_characteristic():
    g = make_diamond()
    assert euler_characteristic(g, 2) == 0  # chi_G(1) = 0 for any graph with an edge
    assert euler_characteristic(g, 3) == DIAMOND(1) == 18
    assert euler_characteristic(Graph(3), 2) == 1


def test_nbc_basis():
    g = make_cycle(4)
    ord_ = nbc_edge_ordering(g)
    assert len(nbc_basis(g, ord_, 3, 2)) == 4
    assert len(nbc_basis(g, ord_, 3, 6)) == 3
    assert nbc_basis(g, ord_, 3, 3) == []
    assert nbc_basis(g, ord_, 3, 8) == []


def test_stable_splitting():
    parts = stable_splitting_summary(make_diamond(), 3)
    assert [(s.sphere_dim, s.multiplicity) for s in parts] == [(6, 4), (4, 8), (2, 5), (0, 1)]


def test_chromatic_equals_nbc_on_every_connected_graph_up_to_seven_vertices():
    from graphgen import atlas_connected

    for g in atlas_connected(7):
        assert poincare_from_nbc(g, nbc_edge_ordering(g), 4) == poincare_from_chromatic(g, 4), g
