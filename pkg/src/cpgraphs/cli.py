"""Command-line interface.

Exit codes: 0 success / affirmative verdict, 1 negative verdict, 2 usage or
input error, 3 internal invariant violation (a witness failed validation or
the two recognition routes disagreed — always a bug, please report it).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from random import Random

from . import __version__
from .certificates import certificate_from_json, certificate_to_json, validate_certificate
from .detectors import find_hole_at_least, is_perfect
from .enumeration import connected_graphs
from .families import FAMILIES, FamilySpec, generate
from .formats import (
    format_edge_list,
    format_graph6,
    format_weighted,
    parse_edge_list,
    parse_graph6,
    parse_weighted,
)
from .graph import Edge, Graph, GraphError, contract_edge, contract_set, set_vertex_cap
from .intervals import (
    check_parity_lemma,
    merge_matches_contraction,
    random_interval_set,
    random_odd_intersection_set,
)
from .kernels import BACKEND
from .recognition import (
    FORBIDDEN,
    SINGLE_EDGE,
    InvariantViolation,
    NotPerfectError,
    Verdict,
    diagnose_edge,
    is_contraction_perfect_forbidden,
    is_contraction_perfect_single_edge,
)
from .utter import WeightedGraph, brute_force_co2plex, max_weight_co2plex, co2plex_to_stable, stable_to_co2plex, utter

SCHEMA = "cpgraphs/1"

OK, NEGATIVE, USAGE, INVARIANT = 0, 1, 2, 3


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        return parse_graph6(text)
    return parse_edge_list(text)


def _emit_json(doc: dict) -> None:
    doc = {"schema": SCHEMA, **doc}
    print(json.dumps(doc, indent=2, sort_keys=True))


def _verdict_doc(g: Graph, verdict: Verdict) -> dict:
    doc: dict = {
        "method": verdict.method,
        "contraction_perfect": verdict.contraction_perfect,
    }
    if verdict.culprit_edge is not None:
        doc["culprit_edge"] = list(verdict.culprit_edge)
        doc["host"] = {"contract_edge": list(verdict.culprit_edge)}
    elif verdict.certificate is not None:
        doc["host"] = "input"
    if verdict.certificate is not None:
        host = verdict.host_graph(g)
        cert_doc = certificate_to_json(host, verdict.certificate)
        if not cert_doc["valid"]:
            raise InvariantViolation("emitted certificate failed validation")
        doc["certificate"] = cert_doc
    return doc


def _verdict_text(g: Graph, verdict: Verdict) -> str:
    if verdict.contraction_perfect:
        return f"[{verdict.method}] contraction perfect"
    lines = [f"[{verdict.method}] NOT contraction perfect"]
    if verdict.culprit_edge is not None:
        e = verdict.culprit_edge
        lines.append(f"  contracting edge {e.u}-{e.v} destroys perfection")
    cert = verdict.certificate
    if cert is not None:
        host = verdict.host_graph(g)
        doc = certificate_to_json(host, cert)
        where = "the contracted graph" if verdict.culprit_edge else "the input"
        lines.append(f"  witness in {where}: {cert.kind} on {doc['vertices']}")
    return "\n".join(lines)


def cmd_recognize(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.verify:
        cert_doc = json.loads(_read_text(args.verify))
        inner = cert_doc.get("certificate", cert_doc)
        host = g
        culprit = cert_doc.get("culprit_edge")
        if culprit:
            host = contract_edge(g, Edge(*culprit))
        cert = certificate_from_json(host, inner)
        ok = validate_certificate(host, cert)
        if args.output == "json":
            _emit_json({"command": "verify", "valid": ok, "kind": cert.kind})
        else:
            print(f"certificate {'valid' if ok else 'INVALID'}: {cert.kind}")
        return OK if ok else INVARIANT

    verdicts = []
    if args.method in (SINGLE_EDGE, "both"):
        verdicts.append(is_contraction_perfect_single_edge(g))
    if args.method in (FORBIDDEN, "both"):
        verdicts.append(is_contraction_perfect_forbidden(g))
    answers = {v.contraction_perfect for v in verdicts}
    if len(answers) > 1:
        raise InvariantViolation("recognition routes disagree on this input")
    answer = answers.pop()
    if args.output == "json":
        _emit_json(
            {
                "command": "recognize",
                "contraction_perfect": answer,
                "agree": True,
                "verdicts": [_verdict_doc(g, v) for v in verdicts],
            }
        )
    else:
        for v in verdicts:
            print(_verdict_text(g, v))
        if len(verdicts) > 1:
            print("methods agree")
    return OK if answer else NEGATIVE


def cmd_diagnose(args) -> int:
    g = _read_graph(args.input, args.format)
    rows = []
    all_safe = True
    for e in g.edges():
        cert = diagnose_edge(g, e)
        if cert is None:
            rows.append({"edge": [e.u, e.v], "safe": True})
        else:
            all_safe = False
            rows.append(
                {
                    "edge": [e.u, e.v],
                    "safe": False,
                    "certificate": certificate_to_json(g, cert),
                }
            )
    if args.output == "json":
        _emit_json({"command": "diagnose", "all_safe": all_safe, "edges": rows})
    else:
        for row in rows:
            e = row["edge"]
            if row["safe"]:
                print(f"edge {e[0]}-{e[1]}: safe")
            else:
                c = row["certificate"]
                print(f"edge {e[0]}-{e[1]}: {c['kind']} on {c['vertices']}")
    return OK if all_safe else NEGATIVE


def cmd_utter(args) -> int:
    g = _read_graph(args.input, args.format)
    ug = utter(g)
    if args.output == "json":
        origins = [
            {"vertex": o} if isinstance(o, int) else {"edge": list(o)}
            for o in ug.origin
        ]
        _emit_json(
            {
                "command": "utter",
                "n": ug.graph.n,
                "m": ug.graph.edge_count,
                "origin": origins,
                "edges": [[e.u, e.v] for e in ug.graph.edges()],
            }
        )
    else:
        print(format_edge_list(ug.graph), end="")
        for i, o in enumerate(ug.origin):
            what = f"vertex {o}" if isinstance(o, int) else f"edge {o.u}-{o.v}"
            print(f"# {i} <- {what}")
    return OK


def cmd_co2plex(args) -> int:
    wg = parse_weighted(_read_text(args.input))
    plex, weight = max_weight_co2plex(wg)
    if args.oracle:
        _, bw = brute_force_co2plex(wg)
        if bw != weight:
            raise InvariantViolation(f"solver weight {weight} != oracle {bw}")
    doc = {
        "command": "co2plex",
        "W": sorted(plex.W),
        "F": sorted([e.u, e.v] for e in plex.F),
        "weight": weight,
    }
    if args.output == "json":
        _emit_json(doc)
    else:
        print(f"weight {weight}")
        print(f"W = {doc['W']}")
        print(f"F = {doc['F']}")
    return OK


def cmd_generate(args) -> int:
    spec = FamilySpec(args.family, args.size, args.seed, args.edge_prob)
    g = generate(spec)
    print(f"# family={spec.family} size={spec.size} seed={spec.seed}", file=sys.stderr)
    if args.to == "graph6":
        print(format_graph6(g))
    elif args.output == "json":
        _emit_json(
            {
                "command": "generate",
                "family": spec.family,
                "size": spec.size,
                "seed": spec.seed,
                "n": g.n,
                "edges": [[e.u, e.v] for e in g.edges()],
            }
        )
    else:
        print(format_edge_list(g), end="")
    return OK


def _lemma_interval_parity(trials: int, rng: Random) -> tuple[int, int]:
    good = 0
    for _ in range(trials):
        s = random_odd_intersection_set(rng)
        if check_parity_lemma(s):
            good += 1
    return good, trials


def _lemma_merge_contract(trials: int, rng: Random) -> tuple[int, int]:
    good = 0
    done = 0
    while done < trials:
        s = random_interval_set(rng, rng.randint(2, 7))
        pairs = [
            (i, j)
            for i in range(len(s))
            for j in range(i + 1, len(s))
            if max(s.intervals[i][0], s.intervals[j][0])
            <= min(s.intervals[i][1], s.intervals[j][1])
        ]
        if not pairs:
            continue
        i, j = pairs[rng.randrange(len(pairs))]
        done += 1
        if merge_matches_contraction(s, i, j):
            good += 1
    return good, trials


def _lemma_hole_survival(trials: int, rng: Random) -> tuple[int, int]:
    from .families import random_graph

    good = 0
    for _ in range(trials):
        n = rng.randint(5, 9)
        g = random_graph(n, rng, 0.45)
        edges = g.edges()
        if not edges:
            good += 1
            continue
        take = rng.randint(1, min(3, len(edges)))
        f = rng.sample(edges, take)
        h = contract_set(g, f)
        ok = True
        for size in range(4, h.n + 1):
            if find_hole_at_least(h, size) is not None:
                if find_hole_at_least(g, size) is None:
                    ok = False
                    break
        if ok:
            good += 1
    return good, trials


def _lemma_bijection(trials: int, rng: Random) -> tuple[int, int]:
    from .families import random_graph
    from .utter import all_co2plexes, all_stable_sets

    good = 0
    for _ in range(trials):
        n = rng.randint(1, 6)
        g = random_graph(n, rng, 0.5)
        ug = utter(g)
        plexes = all_co2plexes(g)
        stables = all_stable_sets(ug.graph)
        mapped = {co2plex_to_stable(ug, p) for p in plexes}
        if mapped == set(stables) and len(mapped) == len(plexes):
            if all(stable_to_co2plex(ug, s) in plexes for s in stables):
                good += 1
    return good, trials


def cmd_check_lemma(args) -> int:
    rng = Random(args.seed)
    batches = {
        "interval-parity": _lemma_interval_parity,
        "merge-contract": _lemma_merge_contract,
        "hole-survival": _lemma_hole_survival,
        "co2plex-bijection": _lemma_bijection,
    }
    names = list(batches) if args.which == "all" else [args.which]
    failed = False
    for name in names:
        good, total = batches[name](args.trials, rng)
        print(f"{name}: {good}/{total} passed (seed {args.seed})")
        if good != total:
            failed = True
    if failed:
        raise InvariantViolation("a property batch failed")
    return OK


def cmd_convert(args) -> int:
    g = _read_graph(args.input, getattr(args, "from"))
    if args.to == "graph6":
        print(format_graph6(g))
    else:
        print(format_edge_list(g), end="")
    return OK


def cmd_selftest(args) -> int:
    total = 0
    for n in range(1, args.max_n + 1):
        catalogue = connected_graphs(n)
        for g in catalogue:
            single = is_contraction_perfect_single_edge(g)
            forbidden = is_contraction_perfect_forbidden(g)
            if single.contraction_perfect != forbidden.contraction_perfect:
                raise InvariantViolation(
                    f"methods disagree on a graph with masks {g.masks}"
                )
        total += len(catalogue)
        print(f"n={n}: {len(catalogue)} connected graphs, methods agree")
    print(f"selftest passed on {total} graphs (kernel backend: {BACKEND})")
    return OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="cpgraphs",
        description="contraction-perfect graph toolkit",
    )
    top.add_argument("--version", action="version", version=f"cpgraphs {__version__}")
    sub = top.add_subparsers(dest="command", required=True)

    def add_io(p, weighted=False):
        p.add_argument("input", nargs="?", default="-", help="file or - for stdin")
        if not weighted:
            p.add_argument(
                "--format", choices=("edge-list", "graph6"), default="edge-list"
            )
        p.add_argument("--output", choices=("human", "json"), default="human")

    p = sub.add_parser("recognize", help="decide contraction perfection")
    add_io(p)
    p.add_argument(
        "--method", choices=(SINGLE_EDGE, FORBIDDEN, "both"), default="both"
    )
    p.add_argument(
        "--verify", metavar="CERT_JSON", help="re-validate a certificate document"
    )
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("diagnose", help="per-edge contraction safety of a perfect graph")
    add_io(p)
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("utter", help="build the utter graph with provenance")
    add_io(p)
    p.set_defaults(func=cmd_utter)

    p = sub.add_parser("co2plex", help="maximum-weight co-2-plex (weighted input)")
    add_io(p, weighted=True)
    p.add_argument(
        "--oracle", action="store_true", help="cross-check against brute force"
    )
    p.set_defaults(func=cmd_co2plex)

    p = sub.add_parser("generate", help="emit a family instance")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--size", "-n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--to", choices=("edge-list", "graph6"), default="edge-list")
    p.add_argument("--output", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check-lemma", help="run a property batch with pass counts")
    p.add_argument(
        "which",
        choices=(
            "interval-parity",
            "merge-contract",
            "hole-survival",
            "co2plex-bijection",
            "all",
        ),
    )
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check_lemma)

    p = sub.add_parser("convert", help="transcode between graph formats")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--from", choices=("edge-list", "graph6"), default="edge-list")
    p.add_argument("--to", choices=("edge-list", "graph6"), default="graph6")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("selftest", help="exhaustive method-agreement sweep")
    p.add_argument("--max-n", type=int, default=7)
    p.set_defaults(func=cmd_selftest)

    return top


def main(argv=None) -> int:
    cap = os.environ.get("CPGRAPHS_MAX_VERTICES")
    if cap:
        try:
            set_vertex_cap(int(cap))
        except (ValueError, GraphError) as exc:
            print(f"bad CPGRAPHS_MAX_VERTICES: {exc}", file=sys.stderr)
            return USAGE
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except NotPerfectError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return INVARIANT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON input: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
