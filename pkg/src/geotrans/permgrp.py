"""Deterministic permutation-group engine built on a base and strong generating set.

Every group in the package is a :class:`PermGroup`.  Construction runs an
incremental Schreier-Sims with stable transversals, so the base, the strong
generators and every derived object are reproducible bit for bit.  Base points
are appended as the smallest point moved by the element that forces them.
"""

from collections import deque
from dataclasses import dataclass
from math import prod

from .perm import (
    check_perm,
    compose,
    conjugate,
    identity,
    inverse,
    is_identity,
)


class CapExceeded(RuntimeError):
    """A configured size limit was hit; the caller must report partially."""

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class NotTransitive(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    """Size limits shared by all modules.

    ``enum`` bounds explicit element enumeration, ``degree`` bounds the
    automorphism search, ``tuples`` bounds the tuple sets used by the
    transitivity checks and ``vertices`` bounds the graph constructors.
    """

    enum: int = 200_000
    degree: int = 2000
    tuples: int = 5_000_000
    vertices: int = 1_000_000
    search_nodes: int = 2_000_000

    @classmethod
    def parse(cls, text, base=None):
        """Parse ``"enum=1000,degree=50"`` on top of ``base`` (default caps)."""
        base = base or cls()
        fields = dict(base.__dict__)
        for item in filter(None, (s.strip() for s in (text or "").split(","))):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in fields:
                raise ValueError("unknown cap %r" % key)
            fields[key] = int(val)
        return cls(**fields)


DEFAULT_CAPS = Caps()


class _Level:
    __slots__ = ("point", "gen_ids", "orbit", "trans", "inv", "checked")

    def __init__(self, point, n):
        self.point = point
        self.gen_ids = []
        self.orbit = [point]
        e = identity(n)
        self.trans = {point: e}
        self.inv = {point: e}
        self.checked = set()


class _Builder:
    """Mutable Schreier-Sims state; frozen into a PermGroup when done."""

    def __init__(self, n, base_prefix=()):
        self.n = n
        self.strong = []
        self.levels = [_Level(b, n) for b in base_prefix]

    def strip(self, g, start=0):
        for lv in range(start, len(self.levels)):
            level = self.levels[lv]
            beta = g[level.point]
            u_inv = level.inv.get(beta)
            if u_inv is None:
                return g, lv
            g = compose(g, u_inv)
        return g, len(self.levels)

    def contains(self, g):
        h, j = self.strip(g)
        return j == len(self.levels) and is_identity(h)

    def _extend_orbit(self, level, new_ids):
        strong = self.strong
        fresh = []
        for beta in list(level.orbit):
            u = level.trans[beta]
            for gid in new_ids:
                img = strong[gid][beta]
                if img not in level.trans:
                    w = compose(u, strong[gid])
                    level.trans[img] = w
                    level.inv[img] = inverse(w)
                    level.orbit.append(img)
                    fresh.append(img)
        queue = deque(fresh)
        while queue:
            beta = queue.popleft()
            u = level.trans[beta]
            for gid in level.gen_ids:
                img = strong[gid][beta]
                if img not in level.trans:
                    w = compose(u, strong[gid])
                    level.trans[img] = w
                    level.inv[img] = inverse(w)
                    level.orbit.append(img)
                    queue.append(img)

    def _add_strong(self, h, lo, hi):
        if hi == len(self.levels):
            moved = next(i for i, x in enumerate(h) if i != x)
            self.levels.append(_Level(moved, self.n))
        gid = len(self.strong)
        self.strong.append(h)
        for lv in range(lo, hi + 1):
            level = self.levels[lv]
            level.gen_ids.append(gid)
            self._extend_orbit(level, [gid])

    def _run(self, i):
        strong = self.strong
        while i >= 0:
            level = self.levels[i]
            restart = False
            k = 0
            while k < len(level.orbit) and not restart:
                beta = level.orbit[k]
                k += 1
                u = level.trans[beta]
                for gid in level.gen_ids:
                    key = (beta, gid)
                    if key in level.checked:
                        continue
                    level.checked.add(key)
                    s = strong[gid]
                    img = s[beta]
                    y = compose(compose(u, s), level.inv[img])
                    if is_identity(y):
                        continue
                    h, j = self.strip(y, i + 1)
                    if j < len(self.levels) or not is_identity(h):
                        self._add_strong(h, i + 1, j)
                        i = j
                        restart = True
                        break
            if not restart:
                i -= 1

    def add(self, g):
        """Add ``g`` to the group; return False if it was already a member."""
        h, j = self.strip(g)
        if j == len(self.levels) and is_identity(h):
            return False
        self._add_strong(h, 0, j)
        self._run(j)
        return True


class PermGroup:
    """A permutation group given by generators, with a verified BSGS.

    Immutable after construction.  ``base`` and ``strong_gens`` satisfy the
    Schreier-Sims invariant, so ``order`` is the product of the fundamental
    orbit lengths.
    """

    def __init__(self, degree, generators, builder):
        self.degree = degree
        self.generators = tuple(generators)
        self._b = builder
        self.base = tuple(lv.point for lv in builder.levels)
        self.strong_gens = tuple(builder.strong)
        self.order = prod(len(lv.orbit) for lv in builder.levels)

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d)" % (self.degree, self.order)

    def contains(self, p):
        if len(p) != self.degree:
            raise ValueError("degree mismatch: %d vs %d" % (len(p), self.degree))
        return self._b.contains(tuple(p))

    __contains__ = contains

    def orbit_lengths(self):
        return [len(lv.orbit) for lv in self._b.levels]

    def level_generators(self, i):
        """Strong generators of the pointwise stabilizer of ``base[:i]``."""
        if i >= len(self._b.levels):
            return []
        return [self._b.strong[g] for g in self._b.levels[i].gen_ids]

    def transversal(self, i):
        """``{point: element}`` mapping ``base[i]`` to each orbit point."""
        return dict(self._b.levels[i].trans)

    def elements(self, cap=None):
        """Yield every element once (stabilizer-chain order)."""
        if cap is not None and self.order > cap:
            raise CapExceeded("element enumeration of order %d > %d" % (self.order, cap))
        levels = self._b.levels
        n = self.degree

        def rec(i, acc):
            if i < 0:
                yield acc
                return
            lv = levels[i]
            for beta in lv.orbit:
                yield from rec(i - 1, compose(acc, lv.trans[beta]))

        yield from rec(len(levels) - 1, identity(n))

    def is_trivial(self):
        return self.order == 1

    def with_base(self, prefix):
        """Same group, rebuilt so that its base starts with ``prefix``."""
        return bsgs_build(self.generators or [identity(self.degree)], degree=self.degree, base=prefix)

    def subgroup(self, gens):
        return bsgs_build(list(gens) or [identity(self.degree)], degree=self.degree)

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def same_as(self, other):
        return self.order == other.order and self.is_subgroup_of(other)


def bsgs_build(generators, degree=None, base=()):
    """Build a :class:`PermGroup` from generators.

    ``base`` optionally fixes a prefix of the base; redundant points are kept.
    """
    gens = [check_perm(g) for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("empty generator list needs an explicit degree")
        degree = len(gens[0])
    if degree == 0:
        raise ValueError("degree 0")
    for g in gens:
        if len(g) != degree:
            raise ValueError("degree mismatch: %d vs %d" % (len(g), degree))
    builder = _Builder(degree, tuple(base))
    for g in gens:
        if not is_identity(g):
            builder.add(g)
    return PermGroup(degree, gens, builder)


def trivial_group(n):
    return bsgs_build([identity(n)])


def order(G):
    return G.order


def membership(G, p):
    return G.contains(p)


def orbit(G, point):
    """Orbit of ``point`` in breadth-first order under the generators."""
    if not 0 <= point < G.degree:
        raise ValueError("point %d out of range" % point)
    seen = {point}
    out = [point]
    k = 0
    while k < len(out):
        x = out[k]
        k += 1
        for g in G.generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


def orbits(G):
    """All orbits, each in BFS order, listed by smallest point."""
    seen = set()
    out = []
    for x in range(G.degree):
        if x not in seen:
            o = orbit(G, x)
            seen.update(o)
            out.append(o)
    return out


def canonical_set(obj):
    return tuple(sorted(obj))


def orbit_of_object(G, obj, apply_fn, key=None, cap=None):
    """Closure of ``{obj}`` under ``G``'s generators.

    ``apply_fn(g, obj)`` is the action; ``key`` canonicalises objects for
    deduplication (defaults to the object itself, so tuples stay ordered).
    """
    key = key or (lambda o: o)
    start = key(obj)
    seen = {start: obj}
    queue = deque([obj])
    while queue:
        x = queue.popleft()
        for g in G.generators:
            y = apply_fn(g, x)
            ky = key(y)
            if ky not in seen:
                seen[ky] = y
                queue.append(y)
                if cap is not None and len(seen) > cap:
                    raise CapExceeded("orbit larger than %d" % cap)
    return list(seen.values())


def apply_to_tuple(g, t):
    return tuple(g[x] for x in t)


def apply_to_set(g, s):
    return frozenset(g[x] for x in s)


def point_stabilizer(G, point):
    if not 0 <= point < G.degree:
        raise ValueError("point %d out of range" % point)
    H = G if G.base[:1] == (point,) else G.with_base((point,))
    return bsgs_build(H.level_generators(1) or [identity(G.degree)], degree=G.degree)


def pointwise_stabilizer(G, points):
    points = tuple(points)
    H = G.with_base(points)
    return bsgs_build(H.level_generators(len(points)) or [identity(G.degree)], degree=G.degree)


def setwise_stabilizer(G, point_set, node_cap=2_000_000):
    """Subgroup of ``G`` fixing ``point_set`` as a set.

    Backtrack over the stabilizer chain of a base starting with the set: at
    each set level the image must stay inside the set, and the pointwise
    stabilizer of the set is included wholesale.
    """
    S = set(point_set)
    n = G.degree
    if len(S) > n // 2:
        S = set(range(n)) - S
    if not S:
        return G
    prefix = tuple(sorted(S))
    H = G.with_base(prefix)
    levels = H._b.levels
    m = len(prefix)
    result = _Builder(n)
    for g in H.level_generators(m):
        result.add(g)
    gens = list(H.level_generators(m))
    nodes = 0

    def rec(i, h):
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise CapExceeded("setwise stabilizer search exceeded %d nodes" % node_cap)
        if i == m:
            if result.add(h):
                gens.append(h)
            return
        lv = levels[i]
        for beta in lv.orbit:
            if h[beta] in S:
                rec(i + 1, compose(lv.trans[beta], h))

    rec(0, identity(n))
    return bsgs_build(gens or [identity(n)], degree=n)


def normal_closure(G, elements):
    """Smallest normal subgroup of ``G`` containing ``elements``."""
    n = G.degree
    elems = [check_perm(e) for e in elements]
    for e in elems:
        if not G.contains(e):
            raise ValueError("element not in G")
    builder = _Builder(n)
    gens = []
    for e in elems:
        if builder.add(e):
            gens.append(e)
    k = 0
    while k < len(gens):
        h = gens[k]
        k += 1
        for g in G.generators:
            c = conjugate(h, g)
            if builder.add(c):
                gens.append(c)
    return PermGroup(n, gens or [identity(n)], builder)


def conjugate_group(H, g):
    """``g^-1 H g``."""
    return bsgs_build([conjugate(h, g) for h in H.generators], degree=H.degree)


def is_transitive(G):
    return len(orbit(G, 0)) == G.degree


def is_regular(G):
    return is_transitive(G) and G.order == G.degree


def is_abelian(G):
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if compose(a, b) != compose(b, a):
                return False
    return True


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def minimal_block(G, a, b):
    """Finest ``G``-invariant partition with ``a`` and ``b`` in one block."""
    n = G.degree
    parent = list(range(n))
    parent[_find(parent, b)] = _find(parent, a)
    queue = deque([(a, b)])
    while queue:
        x, y = queue.popleft()
        for g in G.generators:
            u, v = _find(parent, g[x]), _find(parent, g[y])
            if u != v:
                if u < v:
                    parent[v] = u
                else:
                    parent[u] = v
                queue.append((g[x], g[y]))
    classes = {}
    for x in range(n):
        classes.setdefault(_find(parent, x), []).append(x)
    return sorted(classes.values())


def blocks(G):
    """A minimal nontrivial block system, or ``None`` when ``G`` is primitive.

    Among the minimal block systems containing ``{0, d}`` the one with the
    smallest blocks wins; ties go to the smallest ``d``.
    """
    if not is_transitive(G):
        raise NotTransitive("blocks() needs a transitive group")
    n = G.degree
    best = None
    for d in range(1, n):
        if best is not None and d in best[0]:
            continue
        system = minimal_block(G, 0, d)
        size = len(system[0])
        if size < n and (best is None or size < len(best[0])):
            best = system
            if size == 2:
                break
    return best


def is_primitive(G):
    return blocks(G) is None


def induced_action(G, objects, apply_fn, key=None):
    """Permutation group induced by ``G`` on a finite invariant set of objects.

    Returns ``(group, labels)`` where ``labels[i]`` is the i-th object.
    """
    key = key or (lambda o: o)
    labels = list(objects)
    index = {key(o): i for i, o in enumerate(labels)}
    gens = []
    for g in G.generators:
        img = []
        for o in labels:
            k = key(apply_fn(g, o))
            if k not in index:
                raise ValueError("object set is not invariant")
            img.append(index[k])
        gens.append(tuple(img))
    return bsgs_build(gens, degree=len(labels)), labels
