"""Graph families, permutation-group builders and graph operators.

Vertex encodings are frozen:

* product sets (Hamming, two-coordinate, wreath product action) use mixed
  radix with coordinate 0 most significant, i.e. the order of
  ``itertools.product``;
* k-subsets (Kneser) are 0-indexed and listed in colex order;
* binary vectors (half-cube family) are listed in increasing integer order
  with coordinate 0 as the most significant bit;
* derived bipartite graphs put the points first (``0..n-1``) and the lines
  after them.
"""

import json
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, product
from math import comb
from pathlib import Path

from .graph import (
    Graph,
    bipartition,
    diameter,
    f_membership,
    girth,
    is_automorphism,
    maximal_cliques,
)
from .normal import is_prime, minimal_normal_subgroups
from .perm import compose, compose_all, from_cycles, identity, inverse, perm_order
from .permgrp import (
    DEFAULT_CAPS,
    CapExceeded,
    apply_to_set,
    bsgs_build,
    canonical_set,
    conjugate_group,
    induced_action,
    orbit_of_object,
)


class NotInF(ValueError):
    """The graph is not locally a disjoint union of equal cliques."""


class NotFound(ValueError):
    pass


class AssetCorrupt(RuntimeError):
    pass


@dataclass
class LabeledAction:
    """A group acting on a labelled object set.

    Point ``i`` of ``group`` is the object ``labels[i]`` (a vertex, a clique,
    a coset representative ...).  ``note`` carries free-form provenance.
    """

    group: object
    labels: list
    note: str = ""

    @property
    def degree(self):
        return self.group.degree

    def check(self, g):
        """Raise unless every generator is an automorphism of ``g``."""
        if self.group.degree != g.n:
            raise ValueError("action degree %d != graph order %d" % (self.group.degree, g.n))
        for p in self.group.generators:
            if not is_automorphism(g, p):
                raise ValueError("generator is not an automorphism")
        return True


@dataclass
class IncidenceStructure:
    points: int
    lines: list
    flags: list = field(default_factory=list)

    def __post_init__(self):
        if not self.flags:
            self.flags = [(p, i) for i, line in enumerate(self.lines) for p in line]

    def is_partial_linear_space(self):
        if any(len(line) < 2 for line in self.lines):
            return False
        seen = set()
        for line in self.lines:
            for pair in combinations(sorted(line), 2):
                if pair in seen:
                    return False
                seen.add(pair)
        return True

    def order(self):
        """``(lines per point, points per line)`` if both are constant, else None."""
        per_point = [0] * self.points
        for p, _ in self.flags:
            per_point[p] += 1
        a = set(per_point)
        b = {len(line) for line in self.lines}
        if len(a) == 1 and len(b) == 1:
            return a.pop(), b.pop()
        return None


def _check_cap(count, caps):
    if count > caps.vertices:
        raise CapExceeded("%d vertices > cap %d" % (count, caps.vertices))


# ---------------------------------------------------------------- families


def _product_graph(d, n, adjacent, caps):
    if d < 1 or n < 2:
        raise ValueError("need d >= 1 and n >= 2")
    _check_cap(n**d, caps)
    words = list(product(range(n), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for i, w in enumerate(words):
        for j in adjacent(w, index):
            if i < j:
                edges.append((i, j))
    return Graph(len(words), edges)


def hamming(d, n, caps=DEFAULT_CAPS):
    """H(d, n): words of length d over n symbols, adjacent at Hamming distance 1."""

    def adjacent(w, index):
        for i in range(d):
            for a in range(n):
                if a != w[i]:
                    yield index[w[:i] + (a,) + w[i + 1:]]

    return _product_graph(d, n, adjacent, caps)


def two_coordinate_graph(k, m, caps=DEFAULT_CAPS):
    """Words of length k over m symbols, adjacent at Hamming distance exactly 2."""
    if k < 2 or m < 2:
        raise ValueError("need k >= 2 and m >= 2")

    def adjacent(w, index):
        for i, j in combinations(range(k), 2):
            for a in range(m):
                if a == w[i]:
                    continue
                for b in range(m):
                    if b != w[j]:
                        v = list(w)
                        v[i], v[j] = a, b
                        yield index[tuple(v)]

    return _product_graph(k, m, adjacent, caps)


def word_labels(d, n):
    return list(product(range(n), repeat=d))


def kneser_subsets(n, k):
    return sorted(combinations(range(n), k), key=lambda s: s[::-1])


def kneser(n, k, caps=DEFAULT_CAPS):
    """KG(n, k) on 0-indexed k-subsets in colex order, adjacent when disjoint."""
    if k < 1 or n < 2 * k:
        raise ValueError("need k >= 1 and n >= 2k")
    _check_cap(comb(n, k), caps)
    subsets = [frozenset(s) for s in kneser_subsets(n, k)]
    return Graph.from_adjacency(lambda a, b: not subsets[a] & subsets[b], len(subsets))


def even_weight_vectors(n):
    return [x for x in range(2**n) if bin(x).count("1") % 2 == 0]


def halfcube(n, caps=DEFAULT_CAPS):
    """Even-weight binary n-vectors, adjacent when they differ in exactly 2 entries."""
    if n < 3 or n % 2 == 0:
        raise ValueError("half-cube needs odd n >= 3")
    _check_cap(2 ** (n - 1), caps)
    vs = even_weight_vectors(n)
    return Graph.from_adjacency(lambda a, b: bin(vs[a] ^ vs[b]).count("1") == 2, len(vs))


def foldedcube(n, caps=DEFAULT_CAPS):
    """Even-weight binary n-vectors, adjacent when they agree in exactly 1 entry."""
    if n < 3 or n % 2 == 0:
        raise ValueError("folded cube needs odd n >= 3")
    _check_cap(2 ** (n - 1), caps)
    vs = even_weight_vectors(n)
    return Graph.from_adjacency(lambda a, b: bin(vs[a] ^ vs[b]).count("1") == n - 1, len(vs))


def folded_halfcube_reps(n):
    ones = 2**n - 1
    return [x for x in even_weight_vectors(n) if x < x ^ ones]


def folded_halfcube(n, caps=DEFAULT_CAPS):
    """Even-weight vectors modulo the all-ones vector.

    Classes are adjacent when representatives differ in exactly 2 entries
    or agree in exactly 2 entries.
    """
    if n < 4 or n % 2:
        raise ValueError("folded half-cube needs even n >= 4")
    _check_cap(2 ** (n - 2), caps)
    vs = folded_halfcube_reps(n)

    def adj(a, b):
        w = bin(vs[a] ^ vs[b]).count("1")
        return w == 2 or w == n - 2

    return Graph.from_adjacency(adj, len(vs))


def lcf_graph(n, shifts, repeats):
    """Hamiltonian cycle ``0..n-1`` plus chords from an LCF notation."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    jumps = list(shifts) * repeats
    if len(jumps) != n:
        raise ValueError("LCF notation does not cover %d vertices" % n)
    for i, s in enumerate(jumps):
        edges.append((i, (i + s) % n))
    return Graph(n, edges)


def load_asset(name, path=None):
    """Load a bundled graph (or the JSON file at ``path``) and enforce its ``checks`` block."""
    try:
        if path is None:
            text = resources.files("geotrans").joinpath("data").joinpath(name).read_text()
        else:
            text = Path(path).read_text()
        data = json.loads(text)
        g = Graph(data["n"], data["edges"])
        checks = data["checks"]
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise AssetCorrupt("cannot load asset %s: %s" % (name, exc)) from exc
    measured = {
        "n": g.n,
        "valency": g.valencies()[0] if g.is_regular() and g.n else None,
        "girth": girth(g),
        "diameter": diameter(g),
    }
    for key, want in checks.items():
        if measured.get(key) != want:
            raise AssetCorrupt("asset %s: %s is %r, expected %r" % (name, key, measured.get(key), want))
    return g


def foster_graph():
    """The 90-vertex cubic Foster graph (bundled edge list, self-verified)."""
    return load_asset("foster.json")


# ---------------------------------------------------------------- groups


def sym(n):
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return bsgs_build([identity(1)])
    return bsgs_build([from_cycles(n, (0, 1)), from_cycles(n, tuple(range(n)))])


def alt(n):
    if n < 1:
        raise ValueError("degree must be positive")
    if n < 3:
        return bsgs_build([identity(n)])
    cyc = tuple(range(n)) if n % 2 else tuple(range(1, n))
    return bsgs_build([from_cycles(n, (0, 1, 2)), from_cycles(n, cyc)])


def psl2(p):
    """PSL(2, p) on the projective line: points ``0..p-1`` and infinity ``p``."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    inf_pt = p
    t = tuple(inf_pt if x == inf_pt else (x + 1) % p for x in range(p + 1))
    s = tuple(
        0 if x == inf_pt else inf_pt if x == 0 else (-pow(x, p - 2, p)) % p for x in range(p + 1)
    )
    return bsgs_build([t, s])


def wreath_product_action(A, d, caps=DEFAULT_CAPS):
    """``A wr S_d`` in product action on ``m^d`` words (mixed radix, coordinate 0 first)."""
    m = A.degree
    if d < 1:
        raise ValueError("d must be >= 1")
    if m**d > caps.degree * 1000:
        raise CapExceeded("product action degree %d too large" % m**d)
    words = list(product(range(m), repeat=d))
    index = {w: i for i, w in enumerate(words)}

    def lift(a):
        return tuple(index[(a[w[0]],) + w[1:]] for w in words)

    gens = [lift(a) for a in A.generators]
    if d > 1:
        gens.append(tuple(index[(w[1], w[0]) + w[2:]] for w in words))
        gens.append(tuple(index[w[1:] + w[:1]] for w in words))
    return bsgs_build(gens, degree=len(words))


def hamming_group(d, n):
    """Aut(H(d, n)) = S_n wr S_d, on the same vertex encoding as :func:`hamming`."""
    return wreath_product_action(sym(n), d)


def kneser_action(n, k):
    """S_n acting on the vertices of :func:`kneser`."""
    subsets = [frozenset(s) for s in kneser_subsets(n, k)]
    G, labels = induced_action(sym(n), subsets, apply_to_set)
    return LabeledAction(G, [tuple(sorted(s)) for s in labels], "S%d on %d-subsets" % (n, k))


# ---------------------------------------------------------------- cosets


def _elements(H, caps):
    return list(H.elements(cap=caps.enum))


class _Cosets:
    """Right cosets ``Hx`` keyed by their lexicographically least element."""

    def __init__(self, G, H, caps):
        self.G = G
        self.H = H
        self.h_elems = _elements(H, caps)
        start = identity(G.degree)
        self.reps = orbit_of_object(
            G, start, lambda y, x: compose(x, y), key=self.key, cap=caps.vertices
        )
        self.index = {self.key(x): i for i, x in enumerate(self.reps)}

    def key(self, x):
        return min(compose(h, x) for h in self.h_elems)

    def of(self, x):
        return self.index[self.key(x)]

    def action(self, note):
        gens = [tuple(self.of(compose(x, y)) for x in self.reps) for y in self.G.generators]
        return LabeledAction(bsgs_build(gens, degree=len(self.reps)), [self.key(x) for x in self.reps], note)


def coset_graph(G, H_gens, g, caps=DEFAULT_CAPS):
    """Cos(G, H, HgH): right cosets of ``H``, ``Hx ~ Hdx`` for ``d`` in ``HgH``.

    Returns ``(graph, action, info)``; ``info`` holds the valency computed
    group-theoretically as ``|H : H cap H^g|`` and whether ``G`` acts
    faithfully on the cosets.
    """
    g = tuple(g)
    H = bsgs_build(list(H_gens) or [identity(G.degree)], degree=G.degree)
    if not all(G.contains(x) for x in H.generators) or not G.contains(g):
        raise ValueError("H and g must lie in G")
    if H.contains(g):
        raise ValueError("g lies in H")
    cos = _Cosets(G, H, caps)
    n = len(cos.reps)
    double = {cos.key(compose(g, h)) for h in cos.h_elems}
    if cos.key(inverse(g)) not in double:
        raise ValueError("HgH is not inverse-closed")
    edges = set()
    for i, x in enumerate(cos.reps):
        for h in cos.h_elems:
            j = cos.of(compose_all(g, h, x))
            if i != j:
                edges.add((min(i, j), max(i, j)))
    graph = Graph(n, edges)
    Hg = conjugate_group(H, g)
    meet = sum(1 for h in cos.h_elems if Hg.contains(h))
    action = cos.action("G on right cosets of H")
    info = {
        "index": n,
        "valency_group": H.order // meet,
        "faithful": action.group.order == G.order,
    }
    return graph, action, info


def _core(G, elems):
    """Largest subset of ``elems`` closed under conjugation by ``G`` (a subgroup's core)."""
    from .perm import conjugate

    K = set(elems)
    changed = True
    while changed:
        changed = False
        for k in list(K):
            if any(conjugate(k, s) not in K for s in G.generators):
                K.discard(k)
                changed = True
    return K


def bicoset_graph(G, L_gens, R_gens, caps=DEFAULT_CAPS):
    """Bipartite graph on ``[G:L] + [G:R]``; ``Lx ~ Ry`` iff the cosets meet.

    Returns ``(graph, action, info)`` where L-cosets come first.
    """
    n = G.degree
    L = bsgs_build(list(L_gens) or [identity(n)], degree=n)
    R = bsgs_build(list(R_gens) or [identity(n)], degree=n)
    for K in (L, R):
        if not all(G.contains(x) for x in K.generators):
            raise ValueError("L and R must lie in G")
    inter = [x for x in L.elements(cap=caps.enum) if R.contains(x)]
    core = _core(G, inter)
    if len(core) > 1:
        raise ValueError("L cap R contains a nontrivial normal subgroup of G")
    cl = _Cosets(G, L, caps)
    cr = _Cosets(G, R, caps)
    a = len(cl.reps)
    edges = set()
    for i, x in enumerate(cl.reps):
        for l in cl.h_elems:
            edges.add((i, a + cr.of(compose(l, x))))
    graph = Graph(a + len(cr.reps), edges)
    gens = []
    for y in G.generators:
        gens.append(
            tuple(cl.of(compose(x, y)) for x in cl.reps)
            + tuple(a + cr.of(compose(x, y)) for x in cr.reps)
        )
    labels = [("L", cl.key(x)) for x in cl.reps] + [("R", cr.key(x)) for x in cr.reps]
    action = LabeledAction(bsgs_build(gens, degree=graph.n), labels, "G on cosets of L and R")
    info = {"left": a, "right": len(cr.reps), "intersection_order": len(inter)}
    return graph, action, info


def find_example51_data(p, caps=DEFAULT_CAPS):
    """Locate ``H = S4``, ``h`` of order 4 in ``H`` and ``g`` of order 3 in ``C_G(h) - H``.

    Elements of PSL(2, p) are scanned in stabilizer-chain order, so the
    result is deterministic.  ``H`` is generated by the first order-4
    element ``a`` and the first order-3 ``b`` with ``(ab)^2 = 1``.
    """
    if not is_prime(p) or p % 24 not in (1, 23):
        raise NotFound("need a prime p = +-1 mod 24, got %d" % p)
    G = psl2(p)
    if G.order > caps.enum:
        raise NotFound("|PSL(2,%d)| = %d exceeds the enumeration cap" % (p, G.order))
    elems = list(G.elements())
    orders = [perm_order(x) for x in elems]
    a = next(x for x, o in zip(elems, orders) if o == 4)
    b = next(
        (x for x, o in zip(elems, orders) if o == 3 and perm_order(compose(a, x)) == 2), None
    )
    if b is None:
        raise NotFound("no S4 through the first element of order 4")
    H = bsgs_build([a, b])
    if H.order != 24:
        raise NotFound("generated subgroup has order %d" % H.order)
    mins = minimal_normal_subgroups(H, caps)
    if [M.order for M in mins] != [4]:
        raise NotFound("subgroup of order 24 is not S4")
    h = a
    g = next(
        (
            x
            for x, o in zip(elems, orders)
            if o == 3 and compose(x, h) == compose(h, x) and not H.contains(x)
        ),
        None,
    )
    if g is None:
        raise NotFound("no element of order 3 centralising h outside H")
    return G, [a, b], h, g


def example51(p, caps=DEFAULT_CAPS):
    """The coset graph Cos(PSL(2,p), S4, HgH) with its G-action."""
    G, H_gens, h, g = find_example51_data(p, caps)
    graph, action, info = coset_graph(G, H_gens, g, caps)
    info.update({"H_gens": H_gens, "h": h, "g": g})
    return graph, action, info


# ---------------------------------------------------------------- projective planes


def _field(q):
    if q in (2, 3):
        add = [[(a + b) % q for b in range(q)] for a in range(q)]
        mul = [[(a * b) % q for b in range(q)] for a in range(q)]
    elif q == 4:
        # GF(4) = {0, 1, w, w+1} with w^2 = w + 1, encoded as 2-bit polynomials.
        add = [[a ^ b for b in range(4)] for a in range(4)]
        log = {1: 0, 2: 1, 3: 2}
        exp = [1, 2, 3]
        mul = [[0 if a == 0 or b == 0 else exp[(log[a] + log[b]) % 3] for b in range(4)] for a in range(4)]
    else:
        raise ValueError("pg_incidence supports q in {2, 3, 4}")
    neg = [next(b for b in range(q) if add[a][b] == 0) for a in range(q)]
    return add, mul, neg


def _normalized_vectors(q, mul):
    inv = {a: next(b for b in range(1, q) if mul[a][b] == 1) for a in range(1, q)}
    out = []
    for v in product(range(q), repeat=3):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            out.append(v)
    return out, inv


def pg_incidence(q):
    """Point-line incidence graph of PG(2, q) with PSL(3, q) acting on it.

    Points ``0..N-1`` and lines ``N..2N-1`` are both indexed by normalised
    vectors in lexicographic order; a line is stored by its normal vector.
    """
    add, mul, neg = _field(q)
    vecs, inv = _normalized_vectors(q, mul)
    N = len(vecs)
    index = {v: i for i, v in enumerate(vecs)}

    def dot(u, v):
        s = 0
        for a, b in zip(u, v):
            s = add[s][mul[a][b]]
        return s

    def normalize(v):
        lead = next(x for x in v if x)
        c = inv[lead]
        return tuple(mul[c][x] for x in v)

    edges = [(i, N + j) for i, u in enumerate(vecs) for j, v in enumerate(vecs) if dot(u, v) == 0]
    graph = Graph(2 * N, edges)

    # transvections x_j += t x_i act on row vectors; normals transform by the
    # inverse transpose, i.e. l_i -= t l_j
    scalars = [1] if q < 4 else [1, 2]
    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for t in scalars:
                img = []
                for v in vecs:
                    w = list(v)
                    w[j] = add[w[j]][mul[t][v[i]]]
                    img.append(index[normalize(w)])
                for v in vecs:
                    w = list(v)
                    w[i] = add[w[i]][mul[neg[t]][v[j]]]
                    img.append(N + index[normalize(w)])
                gens.append(tuple(img))
    G = bsgs_build(gens, degree=2 * N)
    labels = [("P", v) for v in vecs] + [("L", v) for v in vecs]
    return graph, LabeledAction(G, labels, "PSL(3,%d) on points and lines" % q)


# ---------------------------------------------------------------- operators


def clique_graph(g):
    """Graph on maximal cliques, adjacent when they share a vertex."""
    cliques = maximal_cliques(g)
    containing = [[] for _ in range(g.n)]
    for i, c in enumerate(cliques):
        for v in c:
            containing[v].append(i)
    edges = {(a, b) for lst in containing for a, b in combinations(lst, 2)}
    return Graph(len(cliques), edges), cliques


def clique_action(action, cliques):
    """Induced action of a vertex action on a list of maximal cliques."""
    G, labels = induced_action(getattr(action, "group", action), cliques, apply_to_set, key=canonical_set)
    return LabeledAction(G, [tuple(c) for c in labels], "induced on maximal cliques")


def incidence_graph(g):
    """Points ``0..n-1`` versus maximal cliques ``n..``, edges by membership."""
    fm = f_membership(g)
    if fm is None:
        raise NotInF("graph is not in any F(m, r)")
    cliques = maximal_cliques(g)
    n = g.n
    edges = [(v, n + i) for i, c in enumerate(cliques) for v in c]
    return Graph(n + len(cliques), edges), IncidenceStructure(n, [tuple(c) for c in cliques])


def incidence_action(action, cliques):
    """A vertex action extended to points plus maximal cliques."""
    G = getattr(action, "group", action)
    n = G.degree
    index = {tuple(c): i for i, c in enumerate(cliques)}
    gens = []
    for p in G.generators:
        img = list(p)
        for c in cliques:
            img.append(n + index[tuple(sorted(p[v] for v in c))])
        gens.append(tuple(img))
    labels = [("P", i) for i in range(n)] + [("L", tuple(c)) for c in cliques]
    return LabeledAction(bsgs_build(gens, degree=n + len(cliques)), labels, "points and cliques")


def quotient_graph(g, partition):
    blocks = [list(b) for b in partition]
    where = [-1] * g.n
    for i, b in enumerate(blocks):
        for v in b:
            if not 0 <= v < g.n or where[v] >= 0:
                raise ValueError("invalid partition")
            where[v] = i
    if min(where, default=0) < 0:
        raise ValueError("partition does not cover every vertex")
    edges = {
        (min(where[u], where[v]), max(where[u], where[v]))
        for u, v in g.edges()
        if where[u] != where[v]
    }
    return Graph(len(blocks), edges)


def standard_double_cover(g):
    """Vertices ``u + i*n`` for ``i`` in {0, 1}; ``(u,i) ~ (v,1-i)`` iff ``u ~ v``."""
    n = g.n
    edges = []
    for u, v in g.edges():
        edges.append((u, v + n))
        edges.append((v, u + n))
    return Graph(2 * n, edges)


def bipart(g, side):
    colors = bipartition(g)
    if colors is None:
        raise ValueError("graph is not bipartite")
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    return [v for v in range(g.n) if colors[v] == side]


def distance2_graph(g, side=0):
    """Distance-2 graph on one bipart (``side`` 0 holds each component's least vertex)."""
    verts = bipart(g, side)
    index = {v: i for i, v in enumerate(verts)}
    edges = set()
    for v in verts:
        for w in g.adj[v]:
            for x in g.adj[w]:
                if x != v and not g.has_edge(v, x):
                    a, b = index[v], index[x]
                    edges.add((min(a, b), max(a, b)))
    return Graph(len(verts), edges)


def complement_of_hamming(n):
    from .graph import complement

    return complement(hamming(2, n))
