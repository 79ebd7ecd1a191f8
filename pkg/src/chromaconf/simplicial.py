"""Order complexes and exact rational homology of finite simplicial complexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Hashable, Iterable, Sequence

from . import guards
from .bond_lattice import BondLattice
from .errors import InputError
from .poset import Poset

Simplex = tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract complex on vertices ``0..n-1``.

    ``faces[d]`` lists the d-dimensional simplices as sorted tuples, sorted.
    The empty face is implicit (it is the augmentation in reduced homology).
    """

    vertex_labels: tuple[Hashable, ...]
    faces: tuple[tuple[Simplex, ...], ...]

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[int]], vertex_labels: Sequence | None = None,
                       max_faces: int | None = None) -> "SimplicialComplex":
        """Close the given simplices under taking nonempty subsets."""
        limit = guards.GUARDS.complex_faces if max_faces is None else max_faces
        closure: set[Simplex] = set()
        stack = [tuple(sorted(set(s))) for s in simplices]
        while stack:
            s = stack.pop()
            if not s or s in closure:
                continue
            closure.add(s)
            if len(closure) > limit:
                guards.check("complex_faces", len(closure), limit)
            if len(s) > 1:
                stack.extend(s[:k] + s[k + 1:] for k in range(len(s)))
        n = 1 + max((v for s in closure for v in s), default=-1)
        labels = tuple(vertex_labels) if vertex_labels is not None else tuple(range(n))
        return cls._from_faceset(closure, labels)

    @classmethod
    def _from_faceset(cls, faceset: Iterable[Simplex], labels: tuple) -> "SimplicialComplex":
        by_dim: dict[int, list[Simplex]] = {}
        for s in faceset:
            by_dim.setdefault(len(s) - 1, []).append(s)
        top = max(by_dim, default=-1)
        faces = tuple(tuple(sorted(by_dim.get(d, ()))) for d in range(top + 1))
        return cls(labels, faces)

    @property
    def dimension(self) -> int:
        """-1 for the empty complex."""
        return len(self.faces) - 1

    def f_vector(self) -> list[int]:
        return [len(f) for f in self.faces]

    @property
    def num_faces(self) -> int:
        return sum(self.f_vector())

    def is_empty(self) -> bool:
        return not self.faces

    def facets(self) -> list[Simplex]:
        out = []
        for d, layer in enumerate(self.faces):
            covered = set()
            if d + 1 < len(self.faces):
                for s in self.faces[d + 1]:
                    covered.update(s[:k] + s[k + 1:] for k in range(len(s)))
            out.extend(s for s in layer if s not in covered)
        return sorted(out)

    def to_json(self) -> dict:
        return {"vertices": [str(v) for v in self.vertex_labels],
                "facets": [list(s) for s in self.facets()]}


def order_complex(poset: Poset, max_elements: int | None = None, max_faces: int | None = None) -> SimplicialComplex:
    """The complex of all nonempty chains of ``poset``."""
    guards.check("poset_elements", len(poset), max_elements)
    limit = guards.GUARDS.complex_faces if max_faces is None else max_faces
    faces: list[Simplex] = []
    # extend chains upward; each chain is produced once from its minimum
    stack: list[Simplex] = [(i,) for i in range(len(poset))]
    while stack:
        chain = stack.pop()
        faces.append(tuple(sorted(chain)))
        if len(faces) > limit:
            guards.check("complex_faces", len(faces), limit)
        for j in poset.above[chain[-1]]:
            stack.append(chain + (j,))
    return SimplicialComplex._from_faceset(faces, poset.labels)


def _rank_exact(columns: list[dict[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given column by column.

    Fraction-free column reduction: pivots are keyed by their largest row
    index; eliminating with integer cross-multiplication and dividing out the
    content keeps entries small and the arithmetic exact.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in columns:
        col = dict(col)
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                g = 0
                for v in col.values():
                    g = gcd(g, v)
                if g > 1:
                    col = {r: v // g for r, v in col.items()}
                pivots[low] = col
                rank += 1
                break
            a, b = piv[low], col[low]
            if a in (1, -1):
                f = b * a  # b / a
                for r, v in piv.items():
                    nv = col.get(r, 0) - f * v
                    if nv:
                        col[r] = nv
                    else:
                        col.pop(r, None)
            else:
                g = gcd(a, b)
                ca, cb = a // g, b // g
                new = {r: ca * v for r, v in col.items()}
                for r, v in piv.items():
                    nv = new.get(r, 0) - cb * v
                    if nv:
                        new[r] = nv
                    else:
                        new.pop(r, None)
                col = new
    return rank


def boundary_columns(c: SimplicialComplex, d: int) -> list[dict[int, int]]:
    """Columns of the boundary map from d-faces to (d-1)-faces (augmented at d=0)."""
    if d == 0:
        return [{0: 1} for _ in c.faces[0]] if c.faces else []
    index = {s: k for k, s in enumerate(c.faces[d - 1])}
    cols = []
    for s in c.faces[d]:
        cols.append({index[s[:k] + s[k + 1:]]: (-1) ** k for k in range(len(s))})
    return cols


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers starting in degree -1: ``values[0]`` is beta~_{-1}."""

    values: tuple[int, ...]

    def __getitem__(self, degree: int) -> int:
        k = degree + 1
        return self.values[k] if 0 <= k < len(self.values) else 0

    def nonzero(self) -> dict[int, int]:
        return {k - 1: v for k, v in enumerate(self.values) if v}

    def euler(self) -> int:
        return sum((-1) ** (k - 1) * v for k, v in enumerate(self.values))

    def to_json(self) -> list[int]:
        return list(self.values)


def reduced_betti_numbers(c: SimplicialComplex) -> BettiVector:
    """beta~_i = dim C_i - rank d_i - rank d_{i+1} for i = -1..dim, over Q."""
    dims = [1] + c.f_vector()  # C_{-1} = Q
    top = len(dims) - 1
    ranks = [0] * (top + 2)  # ranks[k] = rank of boundary out of C_{k-1}
    for d in range(0, top):
        ranks[d + 1] = _rank_exact(boundary_columns(c, d))
    values = tuple(dims[k] - ranks[k] - ranks[k + 1] for k in range(top + 1))
    return BettiVector(values)


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    return -1 + sum((-1) ** d * n for d, n in enumerate(c.f_vector()))


def interval_homology(lat: BondLattice, x) -> BettiVector:
    """Reduced homology of the order complex of (bottom, x)."""
    return reduced_betti_numbers(order_complex(lat.lower_interval(x)))


@dataclass
class HallReport:
    checked: int = 0
    violations: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_hall(lat: BondLattice) -> HallReport:
    """mu(bottom, x) against the reduced Euler characteristic of (bottom, x), for all x > bottom."""
    report = HallReport()
    for k, x in enumerate(lat.elements):
        if k == 0:
            continue
        mu = lat.mobius(0, k)
        chi = reduced_euler_characteristic(order_complex(lat.lower_interval(k)))
        report.checked += 1
        if mu != chi:
            report.violations.append((str(x), mu, chi))
    return report


def complex_from_facets(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    facets = list(facets)
    if any(not list(f) for f in facets):
        raise InputError("facets must be nonempty")
    return SimplicialComplex.from_simplices(facets)
