"""Transitivity of a group on vertices, arcs, s-arcs and s-geodesics.

Every predicate reduces to one kernel: the orbit of a representative tuple
must be the whole (invariant) tuple set.  Local variants use point
stabilizers of one vertex per orbit.
"""

from collections import deque
from dataclasses import dataclass, field

from .graph import all_geodesics, bipartition, s_arcs
from .permgrp import DEFAULT_CAPS, CapExceeded, apply_to_tuple, orbits, point_stabilizer

LINE_ARC_NOTE = (
    "line-1-arc transitivity is taken as the mirror of point-1-arc "
    "transitivity: each line stabilizer is transitive on the points of its line"
)


class ActionNotClosed(RuntimeError):
    """A tuple set handed to the orbit kernel is not invariant under the group."""


@dataclass
class LevelVerdict:
    level: int
    transitive: bool
    count: int
    witness: tuple = None

    def as_dict(self):
        return {
            "level": self.level,
            "transitive": self.transitive,
            "count": self.count,
            "witness": [list(t) for t in self.witness] if self.witness else None,
        }


@dataclass
class TransitivityReport:
    vertex_transitive: bool
    arc_transitive: bool
    s_geodesic_transitive: int
    s_arc_transitive: int
    locally_s_arc_transitive: int
    point_s_arc_transitive: int = None
    witnesses: dict = field(default_factory=dict)
    max_s: int = 2

    def as_dict(self):
        return {
            "max_s": self.max_s,
            "vertex_transitive": self.vertex_transitive,
            "arc_transitive": self.arc_transitive,
            "s_geodesic_transitive": self.s_geodesic_transitive,
            "s_arc_transitive": self.s_arc_transitive,
            "locally_s_arc_transitive": self.locally_s_arc_transitive,
            "point_s_arc_transitive": self.point_s_arc_transitive,
            "witnesses": {k: [list(t) for t in v] for k, v in sorted(self.witnesses.items())},
        }


def _group(action):
    return getattr(action, "group", action)


def is_transitive_on(action, tuple_set, apply=apply_to_tuple, cap=None):
    """``(True, None)`` if the orbit of ``min(tuple_set)`` is everything.

    Otherwise ``(False, (rep, other))`` with ``other`` the least tuple
    outside the representative's orbit.
    """
    G = _group(action)
    universe = set(tuple_set)
    if not universe:
        raise ValueError("tuple set is empty")
    if cap is not None and len(universe) > cap:
        raise CapExceeded("%d tuples > cap %d" % (len(universe), cap))
    rep = min(universe)
    seen = {rep}
    queue = deque([rep])
    while queue:
        t = queue.popleft()
        for g in G.generators:
            u = apply(g, t)
            if u not in universe:
                raise ActionNotClosed("image %r of %r is outside the tuple set" % (u, t))
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) == len(universe):
        return True, None
    return False, (rep, min(universe - seen))


def _levels(action, families, cap):
    out = []
    for level, tuples in families:
        if not tuples:
            out.append(LevelVerdict(level, True, 0))
            continue
        ok, wit = is_transitive_on(action, tuples, cap=cap)
        out.append(LevelVerdict(level, ok, len(tuples), wit))
    return out


def check_vertex_transitive(g, action):
    if g.n == 0:
        return LevelVerdict(0, True, 0)
    ok, wit = is_transitive_on(action, [(v,) for v in range(g.n)])
    return LevelVerdict(0, ok, g.n, wit)


def check_s_geodesic_transitive(g, action, s, caps=DEFAULT_CAPS):
    """Per-level verdicts for i-geodesics, i = 1..s (each level tested on its own)."""
    if s < 1:
        raise ValueError("s must be >= 1")
    fams = [(i, all_geodesics(g, i)) for i in range(1, s + 1)]
    return _levels(action, fams, caps.tuples)


def check_s_arc_transitive(g, action, s, caps=DEFAULT_CAPS):
    """Level i holds when the group is vertex-transitive and transitive on i-arcs."""
    if s < 1:
        raise ValueError("s must be >= 1")
    vt = check_vertex_transitive(g, action)
    out = []
    for v in _levels(action, [(i, s_arcs(g, i)) for i in range(1, s + 1)], caps.tuples):
        if not vt.transitive and v.transitive:
            v = LevelVerdict(v.level, False, v.count, vt.witness)
        out.append(v)
    return out


def _local(g, action, s, roots, caps):
    """Stabilizer of each root transitive on i-arcs from it, i = 1..s."""
    G = _group(action)
    verdicts = [LevelVerdict(i, True, 0) for i in range(1, s + 1)]
    for u in roots:
        Gu = point_stabilizer(G, u)
        for i in range(1, s + 1):
            arcs = s_arcs(g, i, start=u)
            v = verdicts[i - 1]
            v.count += len(arcs)
            if not arcs or not v.transitive:
                continue
            ok, wit = is_transitive_on(Gu, arcs, cap=caps.tuples)
            if not ok:
                verdicts[i - 1] = LevelVerdict(i, False, v.count, wit)
    return verdicts


def vertex_orbit_reps(action, vertices=None):
    G = _group(action)
    reps = [o[0] for o in orbits(G)]
    if vertices is None:
        return reps
    keep = set(vertices)
    return [min(o) for o in orbits(G) if o[0] in keep]


def check_locally_s_arc_transitive(g, action, s, caps=DEFAULT_CAPS):
    if s < 1:
        raise ValueError("s must be >= 1")
    return _local(g, action, s, vertex_orbit_reps(action), caps)


def _side(g, side):
    colors = bipartition(g)
    if colors is None:
        raise ValueError("graph is not bipartite")
    if isinstance(side, int) and side in (0, 1):
        return [v for v in range(g.n) if colors[v] == side]
    return sorted(side)


def _check_side_invariant(action, verts):
    G = _group(action)
    vs = set(verts)
    for p in G.generators:
        if any(p[v] not in vs for v in verts):
            raise ActionNotClosed("group does not preserve the designated bipart")


def check_point_s_arc_transitive(g, action, point_side=0, s=4, caps=DEFAULT_CAPS):
    """Point stabilizers transitive on t-arcs starting at the point, t = 1..s.

    ``point_side`` is 0/1 (a bipartition colour) or an explicit vertex list.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    pts = _side(g, point_side)
    _check_side_invariant(action, pts)
    return _local(g, action, s, vertex_orbit_reps(action, pts), caps)


def check_line_1_arc(g, action, line_side=1, caps=DEFAULT_CAPS):
    lines = _side(g, line_side)
    _check_side_invariant(action, lines)
    return _local(g, action, 1, vertex_orbit_reps(action, lines), caps)[0]


def _max_level(verdicts):
    s = 0
    for v in verdicts:
        if not v.transitive:
            break
        s = v.level
    return s


def _first_witness(verdicts):
    for v in verdicts:
        if not v.transitive:
            return v.witness
    return None


def transitivity_report(g, action, max_s=2, point_side=None, caps=DEFAULT_CAPS):
    """Collect every transitivity verdict up to ``max_s``.

    ``point_side`` (0/1) enables the point-arc check on bipartite graphs.
    """
    vt = check_vertex_transitive(g, action)
    geo = check_s_geodesic_transitive(g, action, max_s, caps)
    arcs = check_s_arc_transitive(g, action, max_s, caps)
    loc = check_locally_s_arc_transitive(g, action, max_s, caps)
    rep = TransitivityReport(
        vertex_transitive=vt.transitive,
        arc_transitive=arcs[0].transitive,
        s_geodesic_transitive=_max_level(geo),
        s_arc_transitive=_max_level(arcs),
        locally_s_arc_transitive=_max_level(loc),
        max_s=max_s,
    )
    for name, vs in (("s_geodesic", geo), ("s_arc", arcs), ("locally_s_arc", loc)):
        w = _first_witness(vs)
        if w:
            rep.witnesses[name] = w
    if not vt.transitive:
        rep.witnesses["vertex"] = vt.witness
    if point_side is not None and bipartition(g) is not None:
        pv = check_point_s_arc_transitive(g, action, point_side, max_s, caps)
        rep.point_s_arc_transitive = _max_level(pv)
        w = _first_witness(pv)
        if w:
            rep.witnesses["point_s_arc"] = w
    return rep


@dataclass
class Theorem24Report:
    two_geodesic: bool
    point_4_arc: bool
    locally_3_arc: bool
    line_1_arc: bool
    note: str = LINE_ARC_NOTE

    @property
    def clause1(self):
        return self.two_geodesic

    @property
    def clause2(self):
        return self.point_4_arc and self.locally_3_arc

    @property
    def clause3(self):
        return self.point_4_arc and self.line_1_arc

    @property
    def consistent(self):
        return self.clause1 == self.clause2 == self.clause3

    def as_dict(self):
        return {
            "clause1_2_geodesic": self.clause1,
            "clause2_point4_local3": self.clause2,
            "clause3_point4_line1": self.clause3,
            "consistent": self.consistent,
            "note": self.note,
        }


def verify_theorem_2_4(g, action, caps=DEFAULT_CAPS):
    """Evaluate the three equivalent conditions for a graph in some F(m, r).

    Condition 1 is read on ``g``; the other two on its point/clique
    incidence graph with the induced action (points first, then cliques).
    """
    from .construct import incidence_action, incidence_graph

    G = _group(action)
    inc, structure = incidence_graph(g)
    ia = incidence_action(G, structure.lines)
    pts = list(range(g.n))
    lines = list(range(g.n, inc.n))
    geo = check_s_geodesic_transitive(g, G, 2, caps)
    p4 = check_point_s_arc_transitive(inc, ia, pts, 4, caps)
    l3 = check_locally_s_arc_transitive(inc, ia, 3, caps)
    l1 = check_line_1_arc(inc, ia, lines, caps)
    return Theorem24Report(
        two_geodesic=all(v.transitive for v in geo),
        point_4_arc=all(v.transitive for v in p4),
        locally_3_arc=all(v.transitive for v in l3),
        line_1_arc=l1.transitive,
    )


def orbit_count_on_tuples(action, tuples):
    """Number of orbits of the group on an invariant tuple set (union-find)."""
    G = _group(action)
    index = {t: i for i, t in enumerate(tuples)}
    parent = list(range(len(tuples)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, i in index.items():
        for g in G.generators:
            j = index[apply_to_tuple(g, t)]
            a, b = find(i), find(j)
            if a != b:
                parent[a] = b
    return len({find(i) for i in range(len(tuples))})
