"""Command-line front end: ``chromaconf <verb> [options]``.

Exit status: 0 success, 1 user error, 2 guard refusal, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import guards
from .bond_lattice import BondLattice, BondPartition
from .chromatic import chromatic_polynomial, whitney_coefficients
from .errors import ChromaconfError, GuardExceeded, InputError, VerificationError
from .forests import nbc_forests
from .graph import Graph, edge_ordering, load_graph
from .obstacles import ObstacleSpec, gamma_poincare, obstacle_poincare, summary
from .poincare import (
    euler_characteristic,
    nbc_basis,
    poincare_from_chromatic,
    poincare_from_gm,
    poincare_from_nbc,
    stable_splitting_summary,
)
from .simplicial import interval_homology
from .verify import LEVELS, verify_graph, verify_suite

GRAPH_VERBS = ("chromatic", "whitney", "nbc-forests", "bond-lattice", "interval-homology")
SPACE_VERBS = ("poincare", "betti", "euler", "basis", "splitting", "obstacles", "verify")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _graph(args) -> Graph:
    if args.graph is None:
        raise InputError(f"{args.verb} needs --graph <expr|path>")
    return load_graph(args.graph)


def _dim(args) -> int:
    if args.dim is None:
        print("notice: --dim not given, using N=2", file=sys.stderr)
        return 2
    return args.dim


def _forest_text(f) -> str:
    return " ".join(f"{i}-{j}" for i, j in f.edges) or "(empty)"


def cmd_chromatic(args):
    chi = chromatic_polynomial(_graph(args))
    _emit(args, chi.to_json("lambda"), chi.format("λ"))


def cmd_whitney(args):
    w = whitney_coefficients(_graph(args))
    text = "\n".join(f"a_{i} = {w[i]}" for i in range(1, w.m + 1))
    _emit(args, {"m": w.m, "a": [str(v) for v in w.a]}, text)


def _series(args, g: Graph, N: int):
    route = args.route
    if route == "chromatic":
        return poincare_from_chromatic(g, N)
    if route == "nbc":
        return poincare_from_nbc(g, edge_ordering(g, args.ordering), N)
    return poincare_from_gm(g, N)


def cmd_poincare(args):
    g = _graph(args)
    p = _series(args, g, _dim(args))
    _emit(args, p.to_json(), p.pretty(symbolic=args.symbolic))


def cmd_betti(args):
    if args.degree is None:
        raise InputError("betti needs --degree <i>")
    p = _series(args, _graph(args), _dim(args))
    b = p.betti(args.degree)
    _emit(args, {"N": p.N, "degree": args.degree, "betti": str(b)}, str(b))


def cmd_euler(args):
    N = _dim(args)
    e = euler_characteristic(_graph(args), N)
    _emit(args, {"N": N, "euler_characteristic": str(e)}, str(e))


def cmd_nbc_forests(args):
    g = _graph(args)
    ordering = edge_ordering(g, args.ordering)
    ks = [args.components] if args.components is not None else range(g.m, 0, -1)
    data, lines = {}, []
    for k in ks:
        fs = nbc_forests(g, ordering, k)
        data[str(k)] = [f.to_json() for f in fs]
        lines.append(f"k={k}: {len(fs)} NBC forests")
        lines.extend("  " + _forest_text(f) for f in fs)
    _emit(args, {"ordering": args.ordering, "forests": data}, "\n".join(lines))


def cmd_basis(args):
    if args.degree is None:
        raise InputError("basis needs --degree <i>")
    g = _graph(args)
    N = _dim(args)
    fs = nbc_basis(g, edge_ordering(g, args.ordering), N, args.degree)
    text = f"{len(fs)} basis classes in degree {args.degree}"
    if not fs and args.degree % (N - 1):
        text += f" (degree not a multiple of N-1={N - 1})"
    text = "\n".join([text] + ["  " + _forest_text(f) for f in fs])
    _emit(args, {"N": N, "degree": args.degree, "forests": [f.to_json() for f in fs]}, text)


def cmd_bond_lattice(args):
    lat = BondLattice(_graph(args))
    mus = [lat.mobius(0, k) for k in range(len(lat))]
    payload = lat.to_json()
    payload["mobius_from_bottom"] = [str(v) for v in mus]
    lines = [f"{len(lat)} bond partitions; by length: "
             + ", ".join(f"k={k}: {c}" for k, c in lat.counts_by_length().items())]
    lines += [f"  {str(x):24s} rank {lat.rank(k)}  mu(0,x) = {mus[k]}" for k, x in enumerate(lat.elements)]
    _emit(args, payload, "\n".join(lines))


def cmd_interval_homology(args):
    lat = BondLattice(_graph(args))
    if args.element:
        targets = [lat.index.get(BondPartition.parse(args.element))]
        if targets[0] is None:
            raise InputError(f"{args.element} is not a bond partition of this graph")
    else:
        targets = range(1, len(lat))
    data, lines = {}, []
    for k in targets:
        b = interval_homology(lat, k)
        x = str(lat.elements[k])
        data[x] = b.to_json()
        nz = ", ".join(f"H~_{d} = Q^{r}" for d, r in b.nonzero().items()) or "acyclic"
        lines.append(f"(0, {x}): {nz}")
    _emit(args, {"reduced_betti_from_degree_minus_1": data}, "\n".join(lines))


def cmd_splitting(args):
    N = _dim(args)
    parts = stable_splitting_summary(_graph(args), N)
    text = " v ".join(f"(S^{s.sphere_dim})^v{s.multiplicity}" for s in parts)
    _emit(args, {"N": N, "summands": [[s.sphere_dim, str(s.multiplicity)] for s in parts]}, text)


def cmd_obstacles(args):
    if args.spec is None:
        raise InputError("obstacles needs --spec <path>")
    spec = ObstacleSpec.load(args.spec)
    N = _dim(args)
    p = obstacle_poincare(spec, N)
    num = gamma_poincare(spec, N)
    payload = p.to_json()
    payload["gamma_series"] = num.to_json()
    payload["summary"] = summary(spec, p)
    _emit(args, payload, f"{summary(spec, p)}\nP_t = {p.pretty()}\nnumerator P_t(Conf_G(n,r)) = {num.pretty()}")


def cmd_verify(args):
    if args.graph is not None:
        g = _graph(args)
        report = verify_graph(g, (_dim(args),), level=args.level, label=args.graph, inject=args.inject_fault)
    else:
        Ns = (args.dim,) if args.dim is not None else (2, 3)
        report = verify_suite(args.scope, Ns)
    _emit(args, report.to_json(), report.render())
    return 0 if report.ok else 3


COMMANDS = {
    "chromatic": cmd_chromatic,
    "whitney": cmd_whitney,
    "poincare": cmd_poincare,
    "betti": cmd_betti,
    "euler": cmd_euler,
    "nbc-forests": cmd_nbc_forests,
    "basis": cmd_basis,
    "bond-lattice": cmd_bond_lattice,
    "interval-homology": cmd_interval_homology,
    "splitting": cmd_splitting,
    "obstacles": cmd_obstacles,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chromaconf", description="Exact invariants of chromatic configuration spaces.")
    p.add_argument("verb", help=", ".join(COMMANDS))
    p.add_argument("--graph", help="builder expression (complete:5, cycle:4, box:complete:3,complete:2, ...) or edge-list file")
    p.add_argument("--spec", help="obstacle spec JSON file")
    p.add_argument("--dim", type=int, help="Euclidean dimension N >= 2 (default 2)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--ordering", default="nbc", help="edge ordering: nbc, lex or random:SEED")
    p.add_argument("--route", choices=("chromatic", "nbc", "gm"), default="chromatic")
    p.add_argument("--symbolic", action="store_true", help="print t-exponents as multiples of N-1")
    p.add_argument("--degree", type=int, help="homological degree for betti/basis")
    p.add_argument("--components", type=int, help="number of trees for nbc-forests")
    p.add_argument("--element", help="bond partition such as 12|34 for interval-homology")
    p.add_argument("--level", choices=LEVELS, default="gm")
    p.add_argument("--scope", choices=("quick", "full"), default="quick")
    p.add_argument("--guard-edges", type=int)
    p.add_argument("--guard-vertices", type=int)
    p.add_argument("--inject-fault", help=argparse.SUPPRESS)
    return p


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.verb not in COMMANDS:
            raise InputError(f"unknown verb {args.verb!r}; choose from {', '.join(COMMANDS)}")
        if args.verb in GRAPH_VERBS and args.dim is not None:
            raise InputError(f"{args.verb} is a pure graph computation and takes no --dim")
        if args.dim is not None and args.dim < 2:
            raise InputError(f"--dim must be >= 2, got {args.dim}")
        if args.graph is not None and args.spec is not None:
            raise InputError("give exactly one input: --graph or --spec")
        if args.guard_edges is not None:
            guards.configure(**{f: args.guard_edges for f in guards.Guards.EDGE_FIELDS})
        if args.guard_vertices is not None:
            guards.configure(**{f: args.guard_vertices for f in guards.Guards.VERTEX_FIELDS})
        status = COMMANDS[args.verb](args)
        return status or 0
    except GuardExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ChromaconfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        guards.reset()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
