"""Exact invariants of chromatic configuration spaces Conf_G(R^N)."""

from .bond_lattice import BondLattice, BondPartition, build_bond_lattice, mobius, rota_characteristic_polynomial
from .chromatic import (
    WhitneyCoefficients,
    chromatic_polynomial,
    count_acyclic_orientations_unique_source,
    count_proper_colorings,
    whitney_coefficients,
)
from .errors import ChromaconfError, GuardExceeded, InputError, VerificationError
from .forests import Forest, contains_broken_cycle, enumerate_spanning_forests, increasing_forests_complete, nbc_forests
from .graph import (
    EdgeOrdering,
    Graph,
    box_product,
    join,
    make_complete,
    make_cycle,
    make_diamond,
    make_path,
    make_star,
    nbc_edge_ordering,
    parse_graph,
    serialize_graph,
)
from .obstacles import ObstacleSpec, build_gamma, obstacle_poincare
from .poincare import (
    PoincareSeries,
    betti,
    euler_characteristic,
    nbc_basis,
    poincare_from_chromatic,
    poincare_from_gm,
    poincare_from_nbc,
    stable_splitting_summary,
)
from .polynomial import IntPolynomial

__version__ = "0.1.0"
