"""JSON file formats for graphs, groups and labelings.

* graph: ``{"n": int, "edges": [[u, v], ...]}`` with ``u < v``, sorted;
  optional ``"family"`` and ``"params"`` record provenance.
* group: ``{"degree": n, "generators": [[images], ...]}``, 0-indexed,
  ``images[i]`` is the image of ``i``; products apply the left factor first.
* labels: ``{"labels": [...]}`` where entry ``i`` describes point ``i``.

Infinite values are written as the string ``"inf"``.
"""

import json
import math
from pathlib import Path

from .graph import Graph
from .permgrp import bsgs_build


class InputError(ValueError):
    """Malformed or inconsistent input file."""


def jsonable(obj):
    """Convert tuples, sets and infinities into plain JSON values."""
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return [jsonable(x) for x in sorted(obj)]
    return obj


def dumps(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2) + "\n"


def _load(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc


def graph_to_dict(g, **meta):
    d = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    d.update({k: v for k, v in meta.items() if v is not None})
    return d


def graph_from_dict(d):
    try:
        n = d["n"]
        edges = [tuple(e) for e in d["edges"]]
        if not isinstance(n, int) or n < 0:
            raise ValueError("n must be a non-negative integer")
        if any(len(e) != 2 or not all(isinstance(x, int) for x in e) for e in edges):
            raise ValueError("edges must be integer pairs")
        return Graph(n, edges)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("bad graph data: %s" % exc) from exc


def write_graph(path, g, **meta):
    Path(path).write_text(dumps(graph_to_dict(g, **meta)))


def read_graph(path):
    d = _load(path)
    return graph_from_dict(d), {k: v for k, v in d.items() if k not in ("n", "edges")}


def group_to_dict(G):
    return {"degree": G.degree, "generators": [list(p) for p in G.generators]}


def group_from_dict(d):
    try:
        n = d["degree"]
        gens = [tuple(p) for p in d["generators"]]
        if not isinstance(n, int) or n < 1:
            raise ValueError("degree must be a positive integer")
        for p in gens:
            if len(p) != n:
                raise ValueError("generator of length %d, degree %d" % (len(p), n))
        return bsgs_build(gens or [tuple(range(n))], degree=n)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("bad group data: %s" % exc) from exc


def write_group(path, G):
    Path(path).write_text(dumps(group_to_dict(G)))


def read_group(path):
    return group_from_dict(_load(path))


def write_labels(path, labels):
    Path(path).write_text(dumps({"labels": labels}))


def read_labels(path):
    d = _load(path)
    if "labels" not in d:
        raise InputError("labels file without 'labels' key")
    return d["labels"]
