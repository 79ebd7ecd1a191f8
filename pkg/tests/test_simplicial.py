import random
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from chromaconf.bond_lattice import BondLattice
from chromaconf.errors import GuardExceeded
from chromaconf.graph import box_product, make_complete, make_cycle, make_diamond, make_path
from chromaconf.poset import Poset
from chromaconf.simplicial import (
    SimplicialComplex,
    boundary_columns,
    complex_from_facets,
    interval_homology,
    order_complex,
    reduced_betti_numbers,
    reduced_euler_characteristic,
    verify_hall,
)

TORUS = [(i % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + \
        [(i % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
       (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]


def sympy_betti(c):
    """Reduced Betti numbers from dense sympy ranks."""
    dims = [1] + c.f_vector()
    ranks = [0] * (len(dims) + 1)
    for d in range(len(dims) - 1):
        cols = boundary_columns(c, d)
        rows = dims[d]
        mat = sympy.zeros(rows, len(cols))
        for k, col in enumerate(cols):
            for r, v in col.items():
                mat[r, k] = v
        ranks[d + 1] = mat.rank()
    return [dims[k] - ranks[k] - ranks[k + 1] for k in range(len(dims))]


def test_point_and_empty():
    assert reduced_betti_numbers(complex_from_facets([(0,)])).nonzero() == {}
    empty = order_complex(Poset.antichain(0))
    assert empty.is_empty() and reduced_betti_numbers(empty).nonzero() == {-1: 1}


def test_spheres():
    for n in range(1, 6):
        boundary = complex_from_facets(combinations(range(n + 2), n + 1))
        assert reduced_betti_numbers(boundary).nonzero() == {n: 1}
    assert reduced_betti_numbers(order_complex(Poset.antichain(3))).nonzero() == {0: 2}


def test_torus_and_projective_plane():
    torus = complex_from_facets(TORUS)
    assert torus.f_vector() == [7, 21, 14]
    assert reduced_betti_numbers(torus).nonzero() == {1: 2, 2: 1}
    rp2 = complex_from_facets(RP2)
    # torsion only, so rational homology vanishes
    assert reduced_betti_numbers(rp2).nonzero() == {}


def test_facets():
    c = complex_from_facets([(0, 1, 2), (2, 3)])
    assert c.facets() == [(0, 1, 2), (2, 3)]
    assert c.dimension == 2 and c.num_faces == 9


@given(st.lists(st.lists(st.integers(0, 6), min_size=1, max_size=4), min_size=1, max_size=8))
@settings(max_examples=60, deadline=None)
def test_exact_rank_matches_sympy(facets):
    c = complex_from_facets(facets)
    b = reduced_betti_numbers(c)
    assert list(b.values) == sympy_betti(c)
    assert b.euler() == reduced_euler_characteristic(c)


def test_chain_is_contractible_and_cone():
    assert reduced_betti_numbers(order_complex(Poset.chain(4))).nonzero() == {}
    coned = Poset.antichain(3).with_top()
    assert reduced_betti_numbers(order_complex(coned)).nonzero() == {}


def test_order_complex_faces_are_chains():
    c = order_complex(Poset.chain(3))
    assert c.f_vector() == [3, 3, 1]


def test_partition_lattice_proper_parts():
    # Pi_m proper part is a wedge of (m-1)! spheres of dimension m-3
    for m, rank in ((3, 2), (4, 6), (5, 24), (6, 120)):
        lat = BondLattice(make_complete(m))
        assert interval_homology(lat, lat.top).nonzero() == {m - 3: rank}


def test_square_and_diamond_intervals():
    lat = BondLattice(make_cycle(4))
    assert interval_homology(lat, lat.top).nonzero() == {1: 3}
    d = BondLattice(make_diamond())
    assert interval_homology(d, d.top).nonzero() == {1: 4}


def test_hall_identity():
    for g in (make_diamond(), make_complete(5), make_path(4), box_product(make_complete(3), make_complete(2))):
        report = verify_hall(BondLattice(g))
        assert report.ok and report.checked == len(BondLattice(g)) - 1


def test_order_complex_guards():
    with pytest.raises(GuardExceeded):
        order_complex(Poset.chain(5), max_elements=4)
    with pytest.raises(GuardExceeded):
        order_complex(Poset.chain(12), max_faces=100)


def test_from_simplices_guard():
    with pytest.raises(GuardExceeded):
        SimplicialComplex.from_simplices([range(12)], max_faces=1000)


def test_random_posets_hall():
    # mu(bottom, top) of P with both ends adjoined equals the reduced Euler characteristic of the open interval
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(1, 6)
        rel = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4}
        changed = True
        while changed:
            extra = {(a, d) for a, b in rel for c, d in rel if b == c} - rel
            changed = bool(extra)
            rel |= extra
        p = Poset(tuple(range(n)), tuple(frozenset(j for i2, j in rel if i2 == i) for i in range(n)))
        mu = {}
        below = {i: {a for a, b in rel if b == i} for i in range(n)}
        for i in range(n):
            mu[i] = -1 - sum(mu[a] for a in below[i])
        mu_top = -1 - sum(mu.values())
        assert mu_top == reduced_euler_characteristic(order_complex(p))
