"""Finite simple undirected graphs and their metric and local structure."""

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import inf

INF = inf


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Immutable after construction.  ``adj[v]`` is the sorted tuple of
    neighbours of ``v``.  Connectivity is not assumed.
    """

    __slots__ = ("n", "adj", "_nbr", "_dist")

    def __init__(self, n, edges=()):
        nbr = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loop at vertex %d" % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) out of range" % (u, v))
            nbr[u].add(v)
            nbr[v].add(u)
        self.n = n
        self._nbr = tuple(frozenset(s) for s in nbr)
        self.adj = tuple(tuple(sorted(s)) for s in nbr)
        self._dist = None

    @classmethod
    def from_adjacency(cls, adj_fn, n):
        """Build from a symmetric predicate ``adj_fn(u, v)``."""
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj_fn(u, v)])

    def __repr__(self):
        return "Graph(n=%d, m=%d)" % (self.n, self.edge_count())

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def has_edge(self, u, v):
        return v in self._nbr[u]

    def neighbors(self, v):
        return self.adj[v]

    def degree(self, v):
        return len(self.adj[v])

    def edges(self):
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_count(self):
        return sum(len(a) for a in self.adj) // 2

    def valencies(self):
        return sorted({len(a) for a in self.adj})

    def is_regular(self):
        return len(self.valencies()) <= 1

    def distance_matrix(self):
        if self._dist is None:
            self._dist = tuple(tuple(distances_from(self, u)) for u in range(self.n))
        return self._dist

    def dist(self, u, v):
        return self.distance_matrix()[u][v]


@dataclass(frozen=True)
class LocalShape:
    """Shape of the graph induced on a neighbourhood.

    ``kind`` is ``"mKr"``, ``"ConnectedDiam2"`` or ``"Other"``; ``m`` and
    ``r`` are set for ``mKr`` (``m=0`` flags an isolated vertex).
    """

    kind: str
    m: int = None
    r: int = None


def distances_from(g, u):
    if not 0 <= u < g.n:
        raise ValueError("vertex %d out of range" % u)
    dist = [INF] * g.n
    dist[u] = 0
    queue = deque([u])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.adj[x]:
            if dist[y] == INF:
                dist[y] = dx
                queue.append(y)
    return dist


def components(g):
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in g.adj[x]:
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g):
    return g.n > 0 and len(components(g)) == 1


def diameter(g):
    if g.n == 0:
        return 0
    if g._dist is not None:
        return max(max(row) for row in g._dist)
    return max(max(distances_from(g, u)) for u in range(g.n))


def girth(g):
    """Length of a shortest cycle; ``INF`` for forests."""
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def is_bipartite(g):
    return bipartition(g) is not None


def bipartition(g):
    """Two-colouring as a list of 0/1, each component's least vertex on side 0."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def s_arcs(g, s, start=None):
    """All s-arcs ``(v0, ..., vs)``: walks without immediate backtracking."""
    if s < 1:
        raise ValueError("s must be >= 1")
    starts = range(g.n) if start is None else [start]
    out = []
    adj = g.adj
    for v in starts:
        stack = [(v,)]
        while stack:
            path = stack.pop()
            if len(path) == s + 1:
                out.append(path)
                continue
            last = path[-1]
            prev = path[-2] if len(path) > 1 else None
            for y in reversed(adj[last]):
                if y != prev:
                    stack.append(path + (y,))
    return out


def geodesics(g, u, s):
    """All s-geodesics starting at ``u``: paths ``(u, v1, ..., vs)`` with ``d(u, vi) = i``."""
    if s < 1:
        raise ValueError("s must be >= 1")
    dist = g._dist[u] if g._dist is not None else distances_from(g, u)
    out = []
    stack = [(u,)]
    adj = g.adj
    while stack:
        path = stack.pop()
        k = len(path)
        if k == s + 1:
            out.append(path)
            continue
        for y in reversed(adj[path[-1]]):
            if dist[y] == k:
                stack.append(path + (y,))
    return out


def all_geodesics(g, s):
    out = []
    for u in range(g.n):
        out.extend(geodesics(g, u, s))
    return out


def two_geodesics(g):
    return all_geodesics(g, 2)


def induced_subgraph(g, vertices):
    vs = list(vertices)
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v])
        for u in vs
        for v in g.adj[u]
        if v in index and index[u] < index[v]
    ]
    return Graph(len(vs), edges)


def local_subgraph(g, u):
    """Graph induced on the neighbourhood of ``u`` (neighbours in sorted order)."""
    return induced_subgraph(g, g.adj[u])


def _is_complete(g, verts):
    return all(g.has_edge(a, b) for a, b in combinations(verts, 2))


def classify_local(g, u):
    loc = local_subgraph(g, u)
    if loc.n == 0:
        return LocalShape("Other", m=0)
    comps = components(loc)
    if all(_is_complete(loc, c) for c in comps) and len({len(c) for c in comps}) == 1:
        return LocalShape("mKr", m=len(comps), r=len(comps[0]))
    if len(comps) == 1 and diameter(loc) == 2:
        return LocalShape("ConnectedDiam2")
    return LocalShape("Other")


def f_membership(g):
    """``(m, r)`` when ``g`` is connected and locally ``mK_r`` everywhere (m >= 2)."""
    if g.n == 0 or not is_connected(g):
        return None
    shape = None
    for u in range(g.n):
        loc = classify_local(g, u)
        if loc.kind != "mKr" or loc.m < 2:
            return None
        if shape is None:
            shape = (loc.m, loc.r)
        elif shape != (loc.m, loc.r):
            return None
    return shape


def maximal_cliques(g):
    """All maximal cliques as sorted tuples, in lexicographic order.

    Bron-Kerbosch with Tomita pivoting.
    """
    nbr = g._nbr
    out = []

    def expand(R, P, X):
        if not P and not X:
            out.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda v: (len(P & nbr[v]), -v))
        for v in sorted(P - nbr[pivot]):
            expand(R + [v], P & nbr[v], X & nbr[v])
            P = P - {v}
            X = X | {v}

    if g.n:
        expand([], set(range(g.n)), set())
    return sorted(out)


def complement(g):
    return Graph(g.n, [(u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v)])


def is_automorphism(g, p):
    if len(p) != g.n:
        raise ValueError("degree mismatch: %d vs %d" % (len(p), g.n))
    if sorted(p) != list(range(g.n)):
        return False
    for u in range(g.n):
        pu = p[u]
        if len(g.adj[pu]) != len(g.adj[u]):
            return False
        for v in g.adj[u]:
            if not g.has_edge(pu, p[v]):
                return False
    return True


def relabel(g, p):
    """Image of ``g`` under the vertex map ``v -> p[v]``."""
    return Graph(g.n, [(p[u], p[v]) for u, v in g.edges()])
