"""Command-line front end.

Exit codes: 0 ok, 1 input error, 2 size refusal, 3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Any, Sequence

from .bonds import SizeLimitError
from .closure import (
    NotClosed,
    Obstruction,
    Ordering,
    compute_J,
    distance_ordering,
    has_one_hat,
    is_crossing_closed,
    is_tightly_closed,
    strongly_upper_crossed_ordering,
    upper_crossing_closed,
    verify_ucc_ordering,
)
from .corpus import corpus_names, describe, parse_corpus_spec
from .graph import (
    Edge,
    Graph,
    GraphError,
    colex_order,
    edge_str,
    is_chordal,
    is_perfectly_labeled,
    lex_order,
    normalize_edge,
    read_edge_list,
)
from .labelings import labeled_dot, maxmin_labeling, minimum_labeling
from .nbc import chromatic_polynomial, isf_counts, nbc_counts, ncnbc_counts
from .oracles import J_LIMIT, OracleLimit, oracle_chromatic, oracle_J, oracle_lattice, oracle_mobius
from .poset import (
    NotGraded,
    bond_lattice,
    characteristic_polynomial,
    grading,
    has_internal_zero,
    is_atomic,
    is_lattice,
    is_semimodular,
    mobius,
    nc_poset,
    to_dot,
)
from .sampling import sample_connected_graphs

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_SIZE, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(Exception):
    pass


# -- input handling ----------------------------------------------------------------

def load_graph(args) -> Graph:
    if args.corpus and args.input:
        raise InputError("give either an edge-list file or --corpus, not both")
    if args.corpus:
        try:
            return parse_corpus_spec(args.corpus)
        except (KeyError, ValueError) as exc:
            raise InputError(str(exc)) from exc
    if not args.input:
        raise InputError("no input graph: pass an edge-list file or --corpus NAME")
    try:
        return read_edge_list(args.input)
    except (OSError, GraphError) as exc:
        raise InputError(str(exc)) from exc


def _parse_edge_token(tok: str, n: int) -> Edge:
    for sep in ("-", ","):
        if sep in tok:
            a, b = tok.split(sep)
            return normalize_edge(int(a), int(b))
    if len(tok) == 2 and n <= 9:
        return normalize_edge(int(tok[0]), int(tok[1]))
    raise InputError(f"cannot read edge {tok!r}")


def read_ordering_file(path: str, G: Graph) -> tuple[Edge, ...]:
    """One edge per line as ``i j``, or tokens like ``12`` / ``1-2``."""
    edges: list[Edge] = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) == 2 and all(p.isdigit() for p in parts) and not (
                    G.n <= 9 and all(len(p) == 2 for p in parts)):
                edges.append(normalize_edge(int(parts[0]), int(parts[1])))
            else:
                edges.extend(_parse_edge_token(p, G.n) for p in parts)
    return tuple(edges)


def resolve_order(G: Graph, spec: str) -> tuple[Edge, ...]:
    try:
        if spec == "lex":
            return lex_order(G)
        if spec == "colex":
            return colex_order(G)
        if spec == "distance":
            return distance_ordering(G)
        sigma = read_ordering_file(spec, G)
        if sorted(sigma) != sorted(G.edges) or len(set(sigma)) != len(sigma):
            raise InputError("ordering file does not list every edge exactly once")
        return sigma
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def edges_json(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def _emit(obj: Any, out: str | None) -> None:
    text = obj if isinstance(obj, str) else json.dumps(obj, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_json(G: Graph) -> dict:
    return {"n": G.n, "edges": edges_json(G.edges), "components": len(G.components)}


# -- report pieces --------------------------------------------------------------

def ucc_json(G: Graph) -> dict:
    res = upper_crossing_closed(G)
    if isinstance(res, Ordering):
        return {"verdict": True, "sigma": [edge_str(e) for e in res.sigma],
                "rounds": [[edge_str(e) for e in r] for r in res.rounds]}
    if isinstance(res, Obstruction):
        return {"verdict": False, "obstruction": edges_json(res.edges)}
    return {"verdict": False, "not_crossing_closed": [edge_str(e) for e in res.witness]}


def crossing_closed_json(G: Graph) -> dict:
    res = is_crossing_closed(G)
    out: dict[str, Any] = {"verdict": res.closed}
    if not res:
        out["witness"] = [edge_str(e) for e in res.failing_pair]
        out["reason"] = res.failure.reason
        if res.failure.witnesses:
            out["minimal_subgraphs"] = [sorted(w) for w in res.failure.witnesses]
    if G.n > J_LIMIT:
        out["uniqueness_certified"] = False
    return out


def suc_json(G: Graph) -> dict:
    if G.n > J_LIMIT:
        return {"verdict": None, "reason": f"minimal container enumeration is limited to n <= {J_LIMIT}"}
    res = strongly_upper_crossed_ordering(G)
    if res.sigma is not None:
        return {"verdict": True, "sigma": [edge_str(e) for e in res.sigma]}
    if res.uncontained_pair is not None:
        return {"verdict": False, "uncontained_pair": [edge_str(e) for e in res.uncontained_pair]}
    return {"verdict": False, "precedence_cycle": [edge_str(e) for e in res.cycle]}


FAMILY_CHECKS = {
    "crossing_closed": crossing_closed_json,
    "ucc": ucc_json,
    "tightly_closed": lambda G: {"verdict": is_tightly_closed(G)},
    "strongly_upper_crossed": suc_json,
    "perfectly_labeled": lambda G: {"verdict": is_perfectly_labeled(G)},
    "chordal": lambda G: {"verdict": is_chordal(G)},
    "has_one_hat": lambda G: {"verdict": has_one_hat(G)},
}


def families_json(G: Graph) -> dict:
    return {name: fn(G) for name, fn in FAMILY_CHECKS.items()}


def poset_json(P) -> dict:
    g = grading(P)
    out: dict[str, Any] = {"size": len(P), "graded": g.graded}
    if g:
        out["rank"] = g.length
    else:
        out["witness_chains"] = [[P.name(i) for i in g.short_chain], [P.name(i) for i in g.long_chain]]
    lat = is_lattice(P)
    out["lattice"] = lat
    out["has_top"] = P.top is not None
    out["atomic"] = is_atomic(P) if lat else None
    out["semimodular"] = is_semimodular(P) if lat else None
    return out


def analysis_report(G: Graph, order: str = "lex") -> dict:
    sigma = resolve_order(G, order)
    P = nc_poset(G)
    L = bond_lattice(G)
    polys: dict[str, Any] = {}
    try:
        chi = characteristic_polynomial(P)
        polys["characteristic_nc"] = chi.to_list()
        polys["internal_zero"] = has_internal_zero(chi)
    except NotGraded:
        polys["characteristic_nc"] = "NotGraded"
        polys["internal_zero"] = None
    polys["characteristic_bond"] = characteristic_polynomial(L).to_list()
    polys["chromatic"] = chromatic_polynomial(G).to_list()
    mu = mobius(P)
    return {
        "schema": SCHEMA,
        "graph": _graph_json(G),
        "order": {"name": order, "sigma": [edge_str(e) for e in sigma]},
        "families": families_json(G),
        "poset": poset_json(P),
        "bond_lattice": {"size": len(L)},
        "polynomials": polys,
        "mobius": {P.name(i): mu[i] for i in range(len(P))},
        "counts": {
            "nbc": nbc_counts(G, sigma),
            "ncnbc": ncnbc_counts(G, sigma),
            "ncisf": isf_counts(G, noncrossing=True),
        },
    }


# -- subcommands ------------------------------------------------------------------

def cmd_analyze(args) -> int:
    G = load_graph(args)
    _emit(analysis_report(G, args.order), args.out)
    return EXIT_OK


def _which_poset(G: Graph, which: str):
    return nc_poset(G) if which == "nc" else bond_lattice(G)


def cmd_poset(args) -> int:
    G = load_graph(args)
    P = _which_poset(G, args.which)
    title = f"{args.which} poset"
    if args.labels == "min":
        text = labeled_dot(minimum_labeling(P, resolve_order(G, args.order)), title)
    elif args.labels == "maxmin":
        text = labeled_dot(maxmin_labeling(P), title)
    else:
        text = to_dot(P, title=title)
    _emit(text, args.dot)
    return EXIT_OK


def cmd_check(args) -> int:
    G = load_graph(args)
    if args.family == "ucc_order":
        sigma = resolve_order(G, args.order)
        res = verify_ucc_ordering(G, sigma)
        verdict: dict[str, Any] = {"verdict": res.ok}
        if not res:
            verdict["failing_pair"] = [edge_str(e) for e in res.failing_pair]
    else:
        verdict = FAMILY_CHECKS[args.family](G)
    _emit({"schema": SCHEMA, "family": args.family, **verdict}, args.out)
    return EXIT_OK


def cmd_nbc(args) -> int:
    G = load_graph(args)
    sigma = resolve_order(G, args.order)
    _emit({
        "schema": SCHEMA,
        "order": [edge_str(e) for e in sigma],
        "nbc": nbc_counts(G, sigma),
        "ncnbc": ncnbc_counts(G, sigma),
        "isf": isf_counts(G),
        "ncisf": isf_counts(G, noncrossing=True),
    }, args.out)
    return EXIT_OK


def cmd_mobius(args) -> int:
    G = load_graph(args)
    P = _which_poset(G, args.which)
    mu = mobius(P)
    _emit({"schema": SCHEMA, "which": args.which,
           "mobius": {P.name(i): mu[i] for i in range(len(P))}}, args.out)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    G = load_graph(args)
    if args.which == "chromatic":
        poly = chromatic_polynomial(G)
    else:
        poly = characteristic_polynomial(_which_poset(G, args.which))
    _emit({"schema": SCHEMA, "which": args.which, "coefficients": poly.to_list(),
           "text": str(poly), "internal_zero": has_internal_zero(poly)}, args.out)
    return EXIT_OK


def _oracle_compare(G: Graph, against: str) -> tuple[Any, Any]:
    if against == "mobius":
        P = nc_poset(G)
        return mobius(P), oracle_mobius(P)
    if against == "crossing_closed":
        return is_crossing_closed(G).closed, oracle_lattice(nc_poset(G))
    if against == "chromatic":
        return chromatic_polynomial(G).to_list(), oracle_chromatic(G).to_list()
    if against == "J":
        fast, slow = {}, {}
        for e, f in G.crossing_pairs():
            key = f"{edge_str(e)},{edge_str(f)}"
            res = compute_J(G, e, f)
            fast[key] = None if isinstance(res, NotClosed) else sorted(res.vertices)
            mins = oracle_J(G, e, f)
            slow[key] = sorted(mins[0]) if len(mins) == 1 else None
        return fast, slow
    raise InputError(f"unknown oracle comparison {against!r}")


def cmd_oracle(args) -> int:
    if args.sample:
        if args.input or args.corpus:
            raise InputError("--sample replaces the input graph")
        rows = []
        for G in sample_connected_graphs(args.sample, seed=args.seed):
            fast, slow = _oracle_compare(G, args.against)
            if fast != slow:
                rows.append({"graph": _graph_json(G), "fast": fast, "oracle": slow})
        _emit({"schema": SCHEMA, "against": args.against, "seed": args.seed,
               "sampled": args.sample, "agree": not rows, "mismatches": rows}, args.out)
        return EXIT_MISMATCH if rows else EXIT_OK
    G = load_graph(args)
    fast, slow = _oracle_compare(G, args.against)
    agree = fast == slow
    _emit({"schema": SCHEMA, "against": args.against, "agree": agree,
           "fast": fast, "oracle": slow}, args.out)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_corpus_list(args) -> int:
    _emit({"schema": SCHEMA,
           "graphs": [{"name": n, "description": describe(n)} for n in corpus_names()]}, args.out)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors; exit code 2 is reserved for size refusals."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ncbond", description="Noncrossing bond posets of graphs.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomised sampling")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker budget (computations here run sequentially)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, order=True):
        sp.add_argument("input", nargs="?", help="edge-list file")
        sp.add_argument("--corpus", help="named graph, e.g. twisted_c4 or complete:5")
        sp.add_argument("--out", help="write output here instead of stdout")
        if order:
            sp.add_argument("--order", default="lex",
                            help="lex, colex, distance, or a file listing the edges in order")

    common(sub.add_parser("analyze", help="full JSON report"))

    sp = sub.add_parser("poset", help="DOT diagram of a poset")
    common(sp)
    sp.add_argument("--which", choices=["nc", "bond"], default="nc")
    sp.add_argument("--dot", help="DOT output path (default stdout)")
    sp.add_argument("--labels", choices=["none", "min", "maxmin"], default="none")

    sp = sub.add_parser("check", help="family membership with certificate")
    common(sp)
    sp.add_argument("--family", required=True, choices=sorted(FAMILY_CHECKS) + ["ucc_order"])

    common(sub.add_parser("nbc", help="NBC, NCNBC and increasing forest counts"))

    sp = sub.add_parser("mobius", help="Möbius values")
    common(sp, order=False)
    sp.add_argument("--which", choices=["nc", "bond"], default="nc")

    sp = sub.add_parser("charpoly", help="characteristic or chromatic polynomial")
    common(sp, order=False)
    sp.add_argument("--which", choices=["nc", "bond", "chromatic"], default="nc")

    sp = sub.add_parser("oracle", help="compare a fast routine with its brute-force oracle")
    common(sp, order=False)
    sp.add_argument("--against", required=True, choices=["mobius", "crossing_closed", "chromatic", "J"])
    sp.add_argument("--sample", type=int, default=0,
                    help="compare on this many seeded random connected graphs instead")

    sp = sub.add_parser("corpus-list", help="list the named graphs")
    sp.add_argument("--out")
    return p


COMMANDS = {
    "analyze": cmd_analyze,
    "poset": cmd_poset,
    "check": cmd_check,
    "nbc": cmd_nbc,
    "mobius": cmd_mobius,
    "charpoly": cmd_charpoly,
    "oracle": cmd_oracle,
    "corpus-list": cmd_corpus_list,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be positive")
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SizeLimitError, OracleLimit) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except NotGraded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
