"""Cross-route consistency checks, runnable per graph or as a batch."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Callable

from . import guards
from .bond_lattice import BondLattice, rota_characteristic_polynomial
from .chromatic import (
    WhitneyCoefficients,
    chromatic_polynomial,
    count_proper_colorings,
    unique_source_counts,
    whitney_coefficients,
)
from .errors import ChromaconfError, GuardExceeded, VerificationError
from .forests import nbc_forest_counts
from .graph import (
    Graph,
    box_product,
    is_connected,
    is_tree,
    make_complete,
    make_cycle,
    make_diamond,
    make_path,
    make_star,
    nbc_edge_ordering,
    random_edge_ordering,
    triangle_count,
)
from .obstacles import ObstacleSpec, full_avoidance_closed_form, obstacle_poincare
from .poincare import (
    euler_characteristic,
    poincare_from_chromatic,
    poincare_from_gm,
    poincare_from_nbc,
    reciprocity_t_coefficients,
)
from .polynomial import IntPolynomial, product
from .simplicial import interval_homology, verify_hall

LEVELS = ("chromatic", "nbc", "gm")


@dataclass
class CheckResult:
    name: str
    subject: str
    status: str  # "pass" | "fail" | "refused"
    identity: str
    detail: str = ""

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.status.upper():7s} {self.name} [{self.subject}] {self.identity}{tail}"


@dataclass
class Report:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    @property
    def refused(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "refused"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def extend(self, other: "Report") -> None:
        self.results.extend(other.results)

    def render(self) -> str:
        lines = [r.line() for r in self.results]
        passed = sum(r.status == "pass" for r in self.results)
        lines.append(f"{passed} passed, {len(self.failures)} failed, {len(self.refused)} refused")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "checks": [r.__dict__ for r in self.results],
                "passed": sum(r.status == "pass" for r in self.results),
                "failed": len(self.failures), "refused": len(self.refused)}


class _Runner:
    def __init__(self, subject: str):
        self.subject = subject
        self.report = Report()

    def run(self, name: str, identity: str, fn: Callable[[], str | None]) -> None:
        try:
            problem = fn()
        except GuardExceeded as exc:
            self.report.results.append(CheckResult(name, self.subject, "refused", identity, str(exc)))
            return
        except VerificationError as exc:
            problem = str(exc)
        status = "fail" if problem else "pass"
        self.report.results.append(CheckResult(name, self.subject, status, identity, problem or ""))


def _describe(g: Graph, label: str | None) -> str:
    return label or f"m={g.m} E={list(g.sorted_edges)}"


def verify_graph(g: Graph, Ns=(2,), level: str = "gm", label: str | None = None,
                 inject: str | None = None) -> Report:
    """Run every applicable identity on one graph.

    ``inject="whitney"`` corrupts the Whitney vector before it is compared,
    so the harness can prove that failures surface.
    """
    if level not in LEVELS:
        raise ChromaconfError(f"unknown level {level!r}; choose from {', '.join(LEVELS)}")
    run = _Runner(_describe(g, label))
    chi = chromatic_polynomial(g)
    connected = is_connected(g)

    def colorings():
        bad = [lam for lam in range(6) if count_proper_colorings(g, lam) != chi(lam)]
        return f"mismatch at lambda={bad}" if bad else None

    run.run("chromatic-vs-colorings", "chi(lambda) equals the brute-force colouring count, lambda=0..5", colorings)
    if not connected:
        for N in Ns:
            run.run(f"euler-identity N={N}", "P_t(-1) = (-1)^(Nm) chi((-1)^N)",
                    lambda N=N: None if euler_characteristic(g, N) is not None else "no value")
        return run.report

    w = whitney_coefficients(g)
    if inject == "whitney":
        w = WhitneyCoefficients(w.m, (w.a[0] + 1,) + w.a[1:])
    elif inject is not None:
        raise ChromaconfError(f"unknown fault {inject!r}")

    def orientations():
        counts = unique_source_counts(g, max_edges=min(guards.GUARDS.orientation_edges, 16))
        bad = {v: c for v, c in counts.items() if c != w.a1}
        return f"a_1={w.a1} but unique-source counts {bad}" if bad else None

    run.run("a1-vs-orientations", "a_1 equals the number of acyclic orientations with a prescribed unique source",
            orientations)

    def whitney_vs_nbc():
        counts = nbc_forest_counts(g, nbc_edge_ordering(g))
        expect = [w[g.m - s] for s in range(g.m)]
        return f"NBC counts {counts} vs Whitney {expect}" if counts != expect else None

    run.run("nbc-vs-whitney", "number of NBC forests with k trees equals a_k", whitney_vs_nbc)

    def ordering_independence():
        ref = nbc_forest_counts(g, nbc_edge_ordering(g))
        for seed in range(5):
            got = nbc_forest_counts(g, random_edge_ordering(g, seed))
            if got != ref:
                return f"ordering random:{seed} gives {got}, NBC ordering {ref}"
        return None

    if level in ("nbc", "gm"):
        run.run("nbc-ordering-independence", "NBC forest counts do not depend on the edge ordering",
                ordering_independence)

    for N in Ns:
        def routes(N=N):
            a = poincare_from_chromatic(g, N)
            b = poincare_from_nbc(g, nbc_edge_ordering(g), N)
            msgs = []
            if a != b:
                msgs.append(f"chromatic {a.base} != nbc {b.base}")
            if level == "gm":
                c = poincare_from_gm(g, N)
                if c != b:
                    msgs.append(f"gm {c.base} != nbc {b.base}")
            return "; ".join(msgs) or None

        name = "poincare-triple-agreement" if level == "gm" else "poincare-agreement"
        run.run(f"{name} N={N}", "Poincare series from chromatic, NBC" + (" and GM routes" if level == "gm" else " routes"),
                routes)

        def euler(N=N):
            euler_characteristic(g, N)

        run.run(f"euler-identity N={N}", "P_t(-1) = (-1)^(Nm) chi((-1)^N)", euler)

        def betas(N=N):
            p = poincare_from_chromatic(g, N)
            e = g.num_edges
            if p.betti(N - 1) != e:
                return f"beta_(N-1)={p.betti(N - 1)} != |E|={e}"
            if g.m >= 2 and p.betti(2 * (N - 1)) != comb(e, 2) - triangle_count(g):
                return f"beta_2(N-1)={p.betti(2 * (N - 1))} != C(|E|,2)-s3={comb(e, 2) - triangle_count(g)}"
            return None

        run.run(f"beta-identities N={N}", "beta_(N-1) = |E| and beta_(2(N-1)) = C(|E|,2) - #triangles", betas)

        if level == "gm" and g.m <= 7:
            def recip(N=N):
                lhs = reciprocity_t_coefficients(g, N)
                rhs = poincare_from_chromatic(g, N).t_coefficients()
                return f"{lhs} != {rhs}" if lhs != rhs else None

            run.run(f"reciprocity N={N}", "(-1)^m t^(m(N-1)) chi(-t^(1-N)) expands to P_t", recip)

    if level == "gm":
        _poset_checks(g, run)
    _closed_forms(g, run, w)
    return run.report


def _poset_checks(g: Graph, run: _Runner) -> None:
    holder: dict = {}

    def lattice():
        guards.check("gm_vertices", g.m)
        holder["lat"] = BondLattice(g)
        return None

    run.run("bond-lattice", "bond lattice builds with bottom and top", lattice)
    lat = holder.get("lat")
    if lat is None:
        return

    def rota():
        r = rota_characteristic_polynomial(lat)
        chi = chromatic_polynomial(g)
        return f"{r} != {chi}" if r != chi else None

    run.run("rota-equals-chromatic", "sum_x mu(0,x) lambda^length(x) equals chi", rota)

    def hall():
        rep = verify_hall(lat)
        return f"violations {rep.violations}" if rep.violations else None

    run.run("hall-identity", "mu(0,x) equals the reduced Euler characteristic of the open interval (0,x)", hall)

    def mobius_top():
        w = whitney_coefficients(g)
        mu = lat.mobius(lat.bottom, lat.top)
        return None if mu == (-1) ** (g.m - 1) * w.a1 else f"mu(0,1)={mu}, a_1={w.a1}"

    run.run("mobius-top", "mu(0,1) = (-1)^(m-1) a_1", mobius_top)

    def wedges():
        for k, x in enumerate(lat.elements):
            if k == 0:
                continue
            factors = lat.interval_product_decomposition(k)
            expected = prod(whitney_coefficients(h).a1 for _, h in factors)
            hom = interval_homology(lat, k).nonzero()
            want = {g.m - x.length - 2: expected}
            if hom != want:
                return f"interval (0,{x}) has homology {hom}, expected {want}"
        return None

    run.run("interval-wedge-concentration",
            "each (0,x) has homology only in degree m-k-2, of rank prod a_1(blocks)", wedges)


def _closed_forms(g: Graph, run: _Runner, w: WhitneyCoefficients) -> None:
    m = g.m
    base = IntPolynomial([w[m - j] for j in range(m)])
    x1 = IntPolynomial([1, 1])
    if g == make_complete(m):
        def complete():
            want = product([IntPolynomial([1, j]) for j in range(1, m)])
            if base != want:
                return f"{base} != {want}"
            if sum(base.coefficients) != factorial(m):
                return f"total rank {sum(base.coefficients)} != {m}!"
            return None

        run.run("complete-graph-product", "P = prod_{j<m} (1 + j x) and total rank m!", complete)
    if m >= 3 and g == make_cycle(m):
        def cycle():
            want = x1 ** m - IntPolynomial.monomial(m - 1) - IntPolynomial.monomial(m)
            return f"{base} != {want}" if base != want else None

        run.run("cycle-formula", "P = (1+x)^m - x^(m-1) - x^m", cycle)
    if is_tree(g):
        def tree():
            if base != x1 ** (m - 1):
                return f"{base} != (1+x)^{m - 1}"
            return None if w.a1 == 1 else f"a_1={w.a1}"

        run.run("tree-formula", "P = (1+x)^(m-1) and a_1 = 1", tree)


def quick_family() -> list[tuple[str, Graph]]:
    out = [(f"K{m}", make_complete(m)) for m in range(1, 6)]
    out += [(f"C{m}", make_cycle(m)) for m in range(3, 7)]
    out += [(f"P{m}", make_path(m)) for m in range(2, 6)]
    out += [(f"St{m}", make_star(m)) for m in range(3, 6)]
    out.append(("diamond", make_diamond()))
    return out


def full_family() -> list[tuple[str, Graph]]:
    out = quick_family()
    out += [("K6", make_complete(6)), ("C7", make_cycle(7)), ("C8", make_cycle(8)),
            ("P7", make_path(7)), ("St7", make_star(7)),
            ("K3xK2", box_product(make_complete(3), make_complete(2))),
            ("C4xK2", box_product(make_cycle(4), make_complete(2)))]
    return out


def obstacle_checks(max_n: int, max_r: int, Ns=(2,)) -> Report:
    run = _Runner("obstacles")
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            for N in Ns:
                def closed(n=n, r=r, N=N):
                    got = obstacle_poincare(ObstacleSpec.full_avoidance(n, r), N).base
                    want = full_avoidance_closed_form(n, r)
                    return f"{got} != {want}" if got != want else None

                run.run(f"full-avoidance n={n} r={r} N={N}",
                        "quotient equals prod_{j<n} (1 + (r+j) x)", closed)
    for n in range(2, max_n + 1):
        def diag(n=n):
            obstacle_poincare(ObstacleSpec.diagonal(n), 2)

        run.run(f"diagonal-avoidance n={n}", "P(G(n,n)) divisible by P(K_n)", diag)
    return run.report


def verify_suite(scope: str = "quick", Ns=(2, 3)) -> Report:
    """Batch run: quick keeps m <= 5, full uses the module guards."""
    if scope not in ("quick", "full"):
        raise ChromaconfError(f"unknown scope {scope!r}")
    family = quick_family() if scope == "quick" else full_family()
    report = Report()
    for label, g in family:
        level = "gm" if g.m <= guards.GUARDS.gm_vertices else "nbc"
        report.extend(verify_graph(g, Ns, level=level, label=label))
    report.extend(obstacle_checks(3 if scope == "quick" else 4, 3, Ns))
    return report
