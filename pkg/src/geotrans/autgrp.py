"""Graph automorphism groups by equitable refinement and individualization.

The first path of the search tree fixes a base ``b_0, b_1, ...``.  Working
from the deepest level up, each vertex ``w`` of the level's target cell that
is not yet in the orbit of ``b_i`` is tried: the search looks for a leaf
below ``b_0..b_{i-1}, w`` whose refinement trace matches the first path and
whose induced map is an automorphism.  Cell order only depends on refinement
counts, never on labels, so matching traces are label-invariant.
"""

from collections import deque
from dataclasses import dataclass

from .graph import Graph
from .permgrp import DEFAULT_CAPS, CapExceeded, bsgs_build, orbits
from .perm import identity


@dataclass(frozen=True)
class ColoredPartition:
    """Ordered cells covering the vertex set."""

    cells: tuple

    def sizes(self):
        return [len(c) for c in self.cells]

    def is_discrete(self):
        return all(len(c) == 1 for c in self.cells)


def _initial(n, colors=None):
    if colors is None:
        return [list(range(n))] if n else [], [0] * n
    groups = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    cells = [groups[k] for k in sorted(groups)]
    cell_of = [0] * n
    for i, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = i
    return cells, cell_of


def _refine(adj, cells, cell_of, splitters):
    """Refine in place to the coarsest equitable partition; return the trace."""
    queue = deque(splitters)
    inq = set(splitters)
    trace = []
    while queue:
        w = queue.popleft()
        inq.discard(w)
        count = {}
        for x in cells[w]:
            for y in adj[x]:
                count[y] = count.get(y, 0) + 1
        for c in sorted({cell_of[y] for y in count}):
            cell = cells[c]
            if len(cell) == 1:
                continue
            groups = {}
            for x in cell:
                groups.setdefault(count.get(x, 0), []).append(x)
            if len(groups) == 1:
                continue
            keys = sorted(groups)
            frags = [groups[k] for k in keys]
            trace.append((c, tuple((k, len(groups[k])) for k in keys)))
            cells[c] = frags[0]
            idx = [c]
            for f in frags[1:]:
                j = len(cells)
                cells.append(f)
                idx.append(j)
                for x in f:
                    cell_of[x] = j
            if c in inq:
                new = idx[1:]
            else:
                big = max(range(len(frags)), key=lambda i: (len(frags[i]), -i))
                new = [j for i, j in enumerate(idx) if i != big]
            for j in new:
                if j not in inq:
                    queue.append(j)
                    inq.add(j)
    return trace


def _individualize(adj, cells, cell_of, v):
    c = cell_of[v]
    cell = cells[c]
    rest = [x for x in cell if x != v]
    cells[c] = [v]
    j = len(cells)
    cells.append(rest)
    for x in rest:
        cell_of[x] = j
    return _refine(adj, cells, cell_of, [c])


def _target(cells):
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


def refine(g, partition=None):
    """Coarsest equitable refinement of ``partition`` (list of cells)."""
    if partition is None:
        cells, cell_of = _initial(g.n)
    else:
        cells = [sorted(c) for c in partition]
        cell_of = [0] * g.n
        seen = 0
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
            seen += len(c)
        if seen != g.n or len({v for c in cells for v in c}) != g.n:
            raise ValueError("not a partition of the vertex set")
    _refine(g.adj, cells, cell_of, list(range(len(cells))))
    return ColoredPartition(tuple(tuple(c) for c in cells))


class _FirstPath:
    def __init__(self, g, colors=None):
        adj = g.adj
        cells, cell_of = _initial(g.n, colors)
        self.root_sizes = [len(c) for c in cells]
        self.root_trace = _refine(adj, cells, cell_of, list(range(len(cells))))
        self.root = ([list(c) for c in cells], list(cell_of))
        self.levels = []
        while True:
            t = _target(cells)
            if t is None:
                break
            v = cells[t][0]
            snap = ([list(c) for c in cells], list(cell_of))
            tr = _individualize(adj, cells, cell_of, v)
            self.levels.append((snap, t, v, tr))
        self.leaf = [c[0] for c in cells]
        self.base = [lv[2] for lv in self.levels]


class _Search:
    def __init__(self, fp, g2, check, node_cap):
        self.fp = fp
        self.adj = g2.adj
        self.check = check
        self.node_cap = node_cap
        self.nodes = 0

    def from_level(self, j, cells, cell_of):
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise CapExceeded("automorphism search exceeded %d nodes" % self.node_cap)
        levels = self.fp.levels
        if j == len(levels):
            p = [0] * len(cells)
            for pos, v in enumerate(self.fp.leaf):
                p[v] = cells[pos][0]
            p = tuple(p)
            return p if self.check(p) else None
        _, t, _, tr = levels[j]
        for x in list(cells[t]):
            c2 = [list(c) for c in cells]
            o2 = list(cell_of)
            if _individualize(self.adj, c2, o2, x) != tr:
                continue
            res = self.from_level(j + 1, c2, o2)
            if res is not None:
                return res
        return None

    def try_image(self, i, w):
        snap, _, _, tr = self.fp.levels[i]
        cells = [list(c) for c in snap[0]]
        cell_of = list(snap[1])
        if _individualize(self.adj, cells, cell_of, w) != tr:
            return None
        return self.from_level(i + 1, cells, cell_of)


def _preserves(g, colors):
    def check(p):
        for u in range(g.n):
            pu = p[u]
            if colors is not None and colors[pu] != colors[u]:
                return False
            if len(g.adj[pu]) != len(g.adj[u]):
                return False
            for v in g.adj[u]:
                if not g.has_edge(pu, p[v]):
                    return False
        return True

    return check


def automorphism_generators(g, colors=None, caps=DEFAULT_CAPS):
    """Generators of the (colour-preserving) automorphism group and the base used."""
    if g.n > caps.degree:
        raise CapExceeded("graph has %d vertices > cap %d" % (g.n, caps.degree))
    if g.n == 0:
        return [], []
    fp = _FirstPath(g, colors)
    search = _Search(fp, g, _preserves(g, colors), caps.search_nodes)
    n = g.n
    gens = []
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(fp.levels) - 1, -1, -1):
        snap, t, b, _ = fp.levels[i]
        for w in snap[0][t]:
            if w == b or find(w) == find(b):
                continue
            p = search.try_image(i, w)
            if p is None:
                continue
            gens.append(p)
            for x in range(n):
                a, c = find(x), find(p[x])
                if a != c:
                    parent[max(a, c)] = min(a, c)
    return gens, fp.base


def automorphism_group(g, colors=None, caps=DEFAULT_CAPS):
    """Full automorphism group of ``g`` as a :class:`PermGroup`.

    With ``colors`` only colour-preserving automorphisms are returned.
    """
    gens, base = automorphism_generators(g, colors, caps)
    return bsgs_build(gens or [identity(max(g.n, 1))], degree=max(g.n, 1), base=base)


def find_isomorphism(g1, g2, colors1=None, colors2=None, caps=DEFAULT_CAPS):
    """A vertex map ``p`` with ``g2 == relabel(g1, p)``, or ``None``."""
    if g1.n != g2.n or sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return None
    if (colors1 is None) != (colors2 is None):
        raise ValueError("colour both graphs or neither")
    if colors1 is not None and sorted(colors1) != sorted(colors2):
        return None
    n = g1.n
    if n == 0:
        return ()
    fp = _FirstPath(g1, colors1)
    cells, cell_of = _initial(n, colors2)
    if [len(c) for c in cells] != fp.root_sizes:
        return None
    if _refine(g2.adj, cells, cell_of, list(range(len(cells)))) != fp.root_trace:
        return None

    def check(p):
        for u in range(n):
            if colors1 is not None and colors2[p[u]] != colors1[u]:
                return False
            for v in g1.adj[u]:
                if not g2.has_edge(p[u], p[v]):
                    return False
        return True

    return _Search(fp, g2, check, caps.search_nodes).from_level(0, cells, cell_of)


def are_isomorphic(g1, g2, caps=DEFAULT_CAPS):
    return find_isomorphism(g1, g2, caps=caps) is not None


def vertex_orbits(g, caps=DEFAULT_CAPS):
    return orbits(automorphism_group(g, caps=caps))


__all__ = [
    "ColoredPartition",
    "Graph",
    "refine",
    "automorphism_group",
    "automorphism_generators",
    "find_isomorphism",
    "are_isomorphic",
]
