import random
from math import comb, factorial

import networkx as nx
import pytest
from sympy.utilities.iterables import multiset_partitions

from chromaconf import guards
from chromaconf.bond_lattice import (
    BondLattice,
    BondPartition,
    interval_product_decomposition,
    rota_characteristic_polynomial,
)
from chromaconf.chromatic import chromatic_polynomial, whitney_coefficients
from chromaconf.errors import DisconnectedGraphError, GuardExceeded, InputError
from chromaconf.graph import (
    box_product,
    make_complete,
    make_cycle,
    make_diamond,
    make_edgeless,
    make_path,
    make_star,
)

from graphgen import random_connected, to_nx


def brute_bonds(g):
    """Set partitions whose blocks induce connected subgraphs."""
    h = to_nx(g)
    out = set()
    for parts in multiset_partitions(list(g.vertices)):
        if all(nx.is_connected(h.subgraph(b)) for b in parts):
            out.add(BondPartition.of(parts))
    return out


def top_down_mobius(lat, x, y):
    """mu(x, y) = -sum_{x < z <= y} mu(z, y): the dual recursion."""
    memo = {}

    def mu(z):
        if z not in memo:
            memo[z] = 1 if z == y else -sum(mu(w) for w in range(len(lat))
                                             if w != z and lat.leq(z, w) and lat.leq(w, y))
        return memo[z]

    return mu(x)


def test_partition_string_round_trip():
    p = BondPartition.of([[4, 5], [3], [1, 2]])
    assert str(p) == "3|12|45"
    assert BondPartition.parse("3|12|45") == p
    wide = BondPartition.of([[10, 11], [1, 2, 3]])
    assert str(wide) == "10,11|1,2,3"
    assert BondPartition.parse(str(wide)) == wide


def test_partition_refines():
    a, b = BondPartition.parse("1|2|34"), BondPartition.parse("12|34")
    assert a.refines(b) and not b.refines(a)
    assert a.rank() == 1 and b.rank() == 2 and a.dimension(3) == 9


def test_square_lattice_fixture():
    lat = BondLattice(make_cycle(4))
    assert lat.counts_by_length() == {1: 1, 2: 6, 3: 4, 4: 1}
    assert str(lat.bottom) == "1|2|3|4" and str(lat.top) == "1234"
    assert BondPartition.parse("13|24") not in lat
    assert lat.mobius(lat.bottom, lat.top) == -3


@pytest.mark.parametrize("g", [make_diamond(), make_cycle(5), make_star(5), make_complete(5),
                               box_product(make_complete(3), make_complete(2))])
def test_elements_match_brute_force(g):
    assert set(BondLattice(g).elements) == brute_bonds(g)


@pytest.mark.parametrize("m", range(1, 7))
def test_complete_graph_lattice_is_partition_lattice(m):
    lat = BondLattice(make_complete(m))
    bell = [1, 1, 2, 5, 15, 52, 203]
    assert len(lat) == bell[m]
    assert lat.mobius(lat.bottom, lat.top) == (-1) ** (m - 1) * factorial(m - 1)


@pytest.mark.parametrize("m", range(3, 9))
def test_cycle_bond_counts(m):
    counts = BondLattice(make_cycle(m)).counts_by_length()
    assert all(counts[k] == comb(m, k) for k in range(2, m + 1))
    assert counts[1] == 1


@pytest.mark.parametrize("m", range(2, 9))
def test_tree_bond_counts(m):
    for g in (make_path(m), make_star(m)):
        counts = BondLattice(g).counts_by_length()
        assert counts == {k: comb(m - 1, m - k) for k in range(1, m + 1)}


def test_mobius_matches_dual_recursion():
    lat = BondLattice(make_diamond())
    for x in range(len(lat)):
        for y in range(len(lat)):
            if lat.leq(x, y):
                assert lat.mobius(x, y) == top_down_mobius(lat, x, y)


def test_mobius_needs_comparable_pair():
    lat = BondLattice(make_cycle(4))
    with pytest.raises(InputError):
        lat.mobius(BondPartition.parse("12|34"), BondPartition.parse("14|23"))
    with pytest.raises(InputError):
        lat.mobius(BondPartition.parse("13|24"), lat.top)


def test_rota_equals_chromatic_on_random_graphs():
    rng = random.Random(5)
    for _ in range(20):
        g = random_connected(rng, rng.randint(2, 7))
        assert rota_characteristic_polynomial(BondLattice(g)) == chromatic_polynomial(g)


def test_mobius_top_is_signed_a1():
    for g in (make_diamond(), make_cycle(6), box_product(make_complete(3), make_complete(2))):
        lat = BondLattice(g)
        assert lat.mobius(0, len(lat) - 1) == (-1) ** (g.m - 1) * whitney_coefficients(g).a1


def test_interval_decomposition_blocks():
    lat = BondLattice(make_diamond())
    parts = interval_product_decomposition(lat, BondPartition.parse("4|123"))
    assert [b for b, _ in parts] == [(4,), (1, 2, 3)]
    assert parts[1][1] == make_complete(3)


def test_lower_interval_excludes_ends():
    lat = BondLattice(make_cycle(4))
    assert len(lat.lower_interval(lat.top)) == 10
    with pytest.raises(InputError):
        lat.lower_interval(lat.bottom)


def test_rejects_disconnected_and_guards():
    with pytest.raises(DisconnectedGraphError):
        BondLattice(make_edgeless(3))
    with pytest.raises(GuardExceeded):
        BondLattice(make_path(11))
    guards.configure(lattice_vertices=3)
    try:
        with pytest.raises(GuardExceeded):
            BondLattice(make_cycle(4))
    finally:
        guards.reset()


def test_json_shape():
    data = BondLattice(make_complete(3)).to_json()
    assert data["elements"] == ["1|2|3", "1|23", "2|13", "3|12", "123"]
    assert data["counts_by_length"] == {"1": 1, "2": 3, "3": 1}
