"""Command-line front end.

Graph inputs accept ``theta:a,b,c``, ``cycle:k``, ``Ck`` (a cycle builtin),
``g6:<graph6>``, ``edges:<n>;<u-v,...>`` or a path to a file holding an
edge list (``n m`` header then pairs), a graph6 line, or one of the literals
above.

Exit codes: 0 pass, 1 counterexample found, 2 parse error, 3 bounds error.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path
from typing import Sequence

from vmcalc import enumeration as en
from vmcalc import hypergraph, isotropic, verify
from vmcalc.equivalence import (
    OrbitTooLarge,
    classify_all,
    local_orbit,
    locally_equivalent_cycle_length,
    non_essential_vertices,
    non_pivotal_vertices,
)
from vmcalc.graph import Graph, GraphError, find_split, from_graph6, is_bipartite, is_prime, parse_edge_list, to_graph6
from vmcalc.theta import (
    OutsideHypotheses,
    ThetaError,
    ThetaSpec,
    build_theta,
    good_theta_for_theorem,
    theta_is_prime,
    theta_non_essential_count,
)
from vmcalc.words import DoubleOccurrenceWord, WordError, contract_chords, interlacement_graph, word_local_complement

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_BOUNDS = 3


class ParseError(ValueError):
    pass


def _fmt_set(s) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def parse_graph(text: str) -> Graph:
    text = text.strip()
    try:
        if text.startswith("theta:"):
            return build_theta(ThetaSpec.parse(text))
        if text.startswith("cycle:") or re.fullmatch(r"C\d+", text):
            k = int(text[6:] if text.startswith("cycle:") else text[1:])
            if k < 3:
                raise ParseError("a cycle needs at least 3 vertices")
            return Graph.cycle(k)
        if text.startswith("g6:"):
            return from_graph6(text[3:])
        if text.startswith("edges:"):
            return _parse_edges_literal(text[6:])
        path = Path(text)
        if path.is_file():
            return _parse_file(path.read_text())
    except (GraphError, ThetaError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"cannot read a graph from {text!r}")


def _parse_edges_literal(body: str) -> Graph:
    head, _, rest = body.partition(";")
    n = int(head)
    if n < 0:
        raise ParseError("vertex count must be non-negative")
    edges = []
    for tok in filter(None, (t.strip() for t in rest.split(","))):
        m = re.fullmatch(r"(\d+)-(\d+)", tok)
        if not m:
            raise ParseError(f"bad edge token {tok!r}")
        u, v = int(m[1]), int(m[2])
        if u == v or u >= n or v >= n:
            raise ParseError(f"edge {tok} is out of range or a loop")
        edges.append((u, v))
    return Graph(range(n), edges)


def _parse_file(content: str) -> Graph:
    lines = [ln.strip() for ln in content.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty graph file")
    first = lines[0]
    if re.fullmatch(r"\d+\s+\d+", first):
        return parse_edge_list("\n".join(lines))
    if len(lines) == 1:
        if ":" in first or re.fullmatch(r"C\d+", first):
            return parse_graph(first)
        return from_graph6(first)
    raise ParseError("unrecognised graph file format")


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_prime(args) -> int:
    G = parse_graph(args.graph)
    prime = is_prime(G)
    print(f"graph: {to_graph6(G)}")
    print(f"prime: {_bool(prime)}")
    if not prime:
        A, B = find_split(G)
        print(f"split: {' '.join(map(str, sorted(A)))} | {' '.join(map(str, sorted(B)))}")
    return EXIT_OK


def cmd_noness(args) -> int:
    G = parse_graph(args.graph)
    print(f"graph: {to_graph6(G)}")
    print("vertex delete local_delete contract")
    for v, cls in classify_all(G).items():
        print(f"{v} {_bool(cls.prime_delete)} {_bool(cls.prime_star_delete)} {_bool(cls.prime_contract)}")
    print(f"non_essential: {_fmt_set(non_essential_vertices(G))}")
    print(f"non_pivotal: {_fmt_set(non_pivotal_vertices(G))}")
    return EXIT_OK


def cmd_orbit(args) -> int:
    G = parse_graph(args.graph)
    orbit = local_orbit(G)
    print(f"graph: {to_graph6(G)}")
    print(f"orbit_size: {len(orbit)}")
    k = locally_equivalent_cycle_length(G, orbit)
    print(f"cycle_member: {k if k is not None else 'none'}")
    print(f"bipartite_members: {sum(is_bipartite(g) for g in orbit.members)}")
    print(f"good_theta_member: {_bool(good_theta_for_theorem(G, orbit))}")
    if args.list:
        for g in sorted(orbit.members, key=lambda g: g.edges()):
            print(f"  - {to_graph6(g)}")
    return EXIT_OK


def cmd_theta(args) -> int:
    spec = ThetaSpec.parse(args.spec)
    G = build_theta(spec)
    print(f"theta: {spec}")
    print(f"vertices: {spec.n}")
    try:
        print(f"prime_by_criterion: {_bool(theta_is_prime(spec))}")
    except ThetaError:
        print("prime_by_criterion: n/a")
    print(f"prime: {_bool(is_prime(G))}")
    try:
        count = theta_non_essential_count(spec)
        print(f"non_essential_closed_form: {count.count} (case {count.case})")
    except OutsideHypotheses:
        print("non_essential_closed_form: outside hypotheses")
    print(f"non_essential: {len(non_essential_vertices(G))}")
    return EXIT_OK


def cmd_isotropic(args) -> int:
    G = parse_graph(args.graph)
    S = isotropic.graph_system(G)
    a = isotropic.find_eulerian_vector(S)
    F = isotropic.fundamental_graph(S, a)
    print(S.dumps(), end="")
    print(f"eulerian_vector: {a}")
    print(f"fundamental_graph: {to_graph6(F)}")
    print(f"three_connected: {_bool(isotropic.is_three_connected(S))}")
    print(f"cyclic: {_bool(isotropic.is_cyclic(S))}")
    print(f"non_essential: {_fmt_set(isotropic.non_essential_vertices(S))}")
    tris = isotropic.triangles(S)
    print(f"triangles: {len(tris)}")
    for t in tris:
        print(f"  - {_fmt_set(t.support())} {t}")
    return EXIT_OK


def cmd_word(args) -> int:
    m = DoubleOccurrenceWord.parse(args.word)
    print(f"word: {m}")
    if args.local:
        m = word_local_complement(m, args.local)
        print(f"local_complement: {m}")
    A = interlacement_graph(m)
    names = m.alphabet
    print("interlacement: " + " ".join(f"{names[u]}{names[v]}" for u, v in A.edges()))
    T = contract_chords(m)
    print("contracted: " + " ".join(f"{names[u]}{names[v]}" for u, v in T.edges))
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify.run_verify(
        args.theorem,
        n_min=args.n_min,
        n_max=args.n_max,
        workers=args.workers,
        dedup=args.dedup_orbits,
        sample=args.sample,
    )
    text = rep.to_text()
    if args.report:
        Path(args.report).write_text(text)
    print(text, end="")
    return EXIT_OK if rep.passed else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vmcalc", description="Prime graphs, vertex-minors and isotropic systems.")
    sub = p.add_subparsers(dest="verb", required=True)

    for name, fn, helptext in (
        ("prime", cmd_prime, "primality and one split"),
        ("noness", cmd_noness, "non-essential and non-pivotal vertices"),
        ("isotropic", cmd_isotropic, "system of (G, alpha, beta), fundamental graph, triangles"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph")
        s.set_defaults(func=fn)

    s = sub.add_parser("orbit", help="local equivalence class summary")
    s.add_argument("graph")
    s.add_argument("--list", action="store_true", help="print every member as graph6")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("theta", help="theta graph closed forms against the direct classifiers")
    s.add_argument("spec", help="e.g. theta:2,3,3 or 2,3,3")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("word", help="interlacement graph and contracted multigraph of a word")
    s.add_argument("word")
    s.add_argument("--local", metavar="LETTER", help="apply m*v first")
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("verify", help="exhaustive theorem check")
    s.add_argument("theorem", choices=verify.THEOREMS)
    s.add_argument("--n-min", type=int)
    s.add_argument("--n-max", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--dedup-orbits", action="store_true")
    s.add_argument("--sample", type=int, help="sample size for prop-igconn")
    s.add_argument("--report", metavar="PATH")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except en.BoundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except OrbitTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except (ParseError, GraphError, ThetaError, WordError, isotropic.IsotropicError, hypergraph.HypergraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
