"""Command-line front end: ``construct``, ``report`` and ``verify-paper``.

Exit codes: 0 success, 1 a verified property failed, 2 bad input,
3 a computation cap was hit (a partial report is still printed).
"""

import argparse
import os
import sys
from dataclasses import asdict
from pathlib import Path

from . import __version__
from . import construct as C
from .autgrp import automorphism_group
from .fileio import (
    InputError,
    dumps,
    read_graph,
    read_group,
    write_graph,
    write_group,
    write_labels,
)
from .graph import (
    bipartition,
    components,
    diameter,
    f_membership,
    girth,
    is_automorphism,
)
from .onanscott import check_clique_action_type, classify
from .permgrp import DEFAULT_CAPS, CapExceeded, Caps, is_transitive
from .symmetry import LINE_ARC_NOTE, transitivity_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3

FAMILIES = {
    "hamming": 2,
    "hamming-complement": 1,
    "kneser": 2,
    "two-coordinate": 2,
    "halfcube": 1,
    "foldedcube": 1,
    "folded-halfcube": 1,
    "coset-psl2": 1,
    "pg-incidence": 1,
    "foster": 0,
    "clique-graph-of": 0,
    "incidence-graph-of": 0,
    "double-cover-of": 0,
    "distance2-of": (0, 1),
}


def _params(text):
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError("--params must be comma-separated integers") from exc


def resolve_caps(flag=None, environ=None):
    environ = os.environ if environ is None else environ
    caps = DEFAULT_CAPS
    try:
        if environ.get("GEOTRANS_CAPS"):
            caps = Caps.parse(environ["GEOTRANS_CAPS"], caps)
        if flag:
            caps = Caps.parse(flag, caps)
    except ValueError as exc:
        raise InputError("bad caps: %s" % exc) from exc
    return caps


def _need_graph(args):
    if not args.graph:
        raise InputError("family %s needs --graph" % args.family)
    g, _ = read_graph(args.graph)
    return g


def _input_group(args, g):
    if not args.group:
        return None
    G = read_group(args.group)
    if G.degree != g.n:
        raise InputError("group degree %d does not match graph order %d" % (G.degree, g.n))
    return G


def build(family, params, args, caps):
    """Return ``(graph, group or None, labels or None)`` for a family."""
    want = FAMILIES.get(family)
    if want is None:
        raise InputError("unknown family %r" % family)
    counts = want if isinstance(want, tuple) else (want,)
    if len(params) not in counts:
        raise InputError("family %s takes %s integer parameter(s)" % (family, " or ".join(map(str, counts))))
    try:
        if family == "hamming":
            d, n = params
            return C.hamming(d, n, caps), C.hamming_group(d, n), C.word_labels(d, n)
        if family == "hamming-complement":
            (n,) = params
            return C.complement_of_hamming(n), C.hamming_group(2, n), C.word_labels(2, n)
        if family == "kneser":
            n, k = params
            act = C.kneser_action(n, k)
            return C.kneser(n, k, caps), act.group, act.labels
        if family == "two-coordinate":
            k, m = params
            return C.two_coordinate_graph(k, m, caps), C.hamming_group(k, m), C.word_labels(k, m)
        if family == "halfcube":
            return C.halfcube(params[0], caps), None, C.even_weight_vectors(params[0])
        if family == "foldedcube":
            return C.foldedcube(params[0], caps), None, C.even_weight_vectors(params[0])
        if family == "folded-halfcube":
            return C.folded_halfcube(params[0], caps), None, C.folded_halfcube_reps(params[0])
        if family == "coset-psl2":
            g, act, _ = C.example51(params[0], caps)
            return g, act.group, None
        if family == "pg-incidence":
            g, act = C.pg_incidence(params[0])
            return g, act.group, act.labels
        if family == "foster":
            return C.foster_graph(), None, None
        if family == "double-cover-of":
            return C.standard_double_cover(_need_graph(args)), None, None
        if family == "distance2-of":
            g = _need_graph(args)
            side = params[0] if params else 0
            return C.distance2_graph(g, side), None, C.bipart(g, side)
        g = _need_graph(args)
        G = _input_group(args, g)
        if family == "clique-graph-of":
            cg, cliques = C.clique_graph(g)
            group = C.clique_action(G, cliques).group if G else None
            return cg, group, cliques
        inc, S = C.incidence_graph(g)
        group = C.incidence_action(G, S.lines).group if G else None
        return inc, group, list(range(g.n)) + S.lines
    except (ValueError, C.NotFound) as exc:
        raise InputError(str(exc)) from exc


def cmd_construct(args, caps):
    g, G, labels = build(args.family, _params(args.params), args, caps)
    prefix = Path(args.output)
    prefix.parent.mkdir(parents=True, exist_ok=True)
    written = []
    meta = {"family": args.family, "params": _params(args.params)}
    path = Path(str(prefix) + ".graph.json")
    write_graph(path, g, **meta)
    written.append(str(path))
    if G is not None:
        path = Path(str(prefix) + ".group.json")
        write_group(path, G)
        written.append(str(path))
    if labels is not None:
        path = Path(str(prefix) + ".labels.json")
        write_labels(path, labels)
        written.append(str(path))
    sys.stdout.write(dumps({"schema": 1, "written": written, "n": g.n}))
    return EXIT_OK


def _graph_stats(g):
    comps = components(g)
    return {
        "n": g.n,
        "edges": g.edge_count(),
        "valencies": g.valencies(),
        "girth": girth(g),
        "diameter": diameter(g),
        "connected": len(comps) == 1,
        "component_sizes": sorted(len(c) for c in comps),
        "bipartite": bipartition(g) is not None,
    }


def build_report(g, meta, G, group_source, args, caps):
    """Assemble the report; on a cap, return what was computed plus the error."""
    report = {
        "schema": 1,
        "provenance": {
            "tool": "geotrans",
            "version": __version__,
            "graph_file": os.path.basename(args.graph),
            "group_file": os.path.basename(args.group) if args.group else None,
            "group_source": group_source,
            "construction": meta or None,
            "caps": asdict(caps),
            "max_s": args.max_s,
        },
        "graph": _graph_stats(g),
    }
    fm = f_membership(g)
    report["f_membership"] = list(fm) if fm else None
    try:
        if G is None:
            G = automorphism_group(g, caps=caps)
        report["group"] = {"degree": G.degree, "order": G.order, "generators": len(G.generators)}
        point_side = 0 if report["graph"]["bipartite"] and g.n else None
        if point_side is not None:
            colors = bipartition(g)
            side = [v for v in range(g.n) if colors[v] == 0]
            if any(p[v] not in set(side) for p in G.generators for v in side):
                point_side = None
        tr = transitivity_report(g, G, args.max_s, point_side, caps)
        report["transitivity"] = tr.as_dict()
        report["notes"] = [LINE_ARC_NOTE] if point_side is not None else []
        if args.classify:
            if g.n and not is_transitive(G):
                report["vertex_type"] = None
                report["notes"].append("group is not transitive on vertices; no type assigned")
            elif fm is not None:
                cr = check_clique_action_type(g, G, caps)
                report.update(cr.as_dict())
            elif g.n:
                report["vertex_type"] = classify(G, caps).as_dict()
        if fm is not None:
            inc, _ = C.incidence_graph(g)
            m, r = fm
            report["incidence"] = {
                "point_valency": m,
                "line_valency": r + 1,
                "vertices": inc.n,
                "girth": girth(inc),
            }
    except CapExceeded as exc:
        report["error"] = {"kind": "CapExceeded", "message": str(exc)}
        return report, EXIT_CAP
    return report, EXIT_OK


def cmd_report(args, caps):
    g, meta = read_graph(args.graph)
    G = _input_group(args, g)
    if G is not None and not all(is_automorphism(g, p) for p in G.generators):
        raise InputError("a group generator is not an automorphism of the graph")
    report, code = build_report(g, meta, G, "file" if G else "automorphism_group", args, caps)
    sys.stdout.write(dumps(report))
    return code


def cmd_verify_paper(args, caps):
    from .verify import CASES, run_case

    names = list(CASES) if args.case in (None, "all") else [args.case]
    for name in names:
        if name not in CASES:
            raise InputError("unknown case %r; choose from %s" % (name, ", ".join(CASES)))
    results = []
    for name in names:
        res = run_case(name)
        results.append(res)
        print(res.summary())
        for c in res.checks:
            print("    %-4s %s: expected %r, computed %r" % ("ok" if c.ok else "FAIL", c.label, c.expected, c.computed))
        for n in res.notes:
            print("    note: %s" % n)
    if args.output:
        Path(args.output).write_text(dumps({"schema": 1, "cases": [r.as_dict() for r in results]}))
    failed = [r.name for r in results if not r.passed]
    print("%d/%d cases passed%s" % (len(results) - len(failed), len(results),
                                    "; failed: " + ", ".join(failed) if failed else ""))
    return EXIT_FAIL if failed else EXIT_OK


def make_parser():
    p = argparse.ArgumentParser(prog="geotrans", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--caps", help="override caps, e.g. enum=100000,degree=500")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a graph family and write JSON files")
    c.add_argument("--family", required=True, choices=sorted(FAMILIES))
    c.add_argument("--params", default="", help="comma-separated integers")
    c.add_argument("--graph", help="input graph for the *-of families")
    c.add_argument("--group", help="input group for clique-graph-of / incidence-graph-of")
    c.add_argument("-o", "--output", required=True, help="output prefix")

    r = sub.add_parser("report", help="JSON property report for a graph")
    r.add_argument("--graph", required=True)
    r.add_argument("--group", help="group JSON; defaults to the full automorphism group")
    r.add_argument("--max-s", type=int, default=2)
    r.add_argument("--classify", action=argparse.BooleanOptionalAction, default=True)

    v = sub.add_parser("verify-paper", help="run the instance checks")
    v.add_argument("--case", default="all")
    v.add_argument("-o", "--output", help="also write results as JSON")
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        caps = resolve_caps(args.caps)
        if args.command == "report" and args.max_s < 1:
            raise InputError("--max-s must be >= 1")
        handler = {"construct": cmd_construct, "report": cmd_report, "verify-paper": cmd_verify_paper}
        return handler[args.command](args, caps)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
