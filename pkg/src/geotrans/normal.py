"""Minimal normal subgroups, socle and simplicity.

Two routes are available.  Small groups are handled by enumerating elements,
splitting them into conjugacy classes and keeping the minimal normal closures
of class representatives.  Larger groups use a structural route that never
enumerates ``G``:

* descend from ``G`` through normal closures until a subnormal simple
  subgroup ``T`` is certified (by enumerating ``T`` only);
* the normal closure of a nonabelian ``T`` is the product of its conjugates,
  a minimal normal subgroup; abelian candidates are reduced to elementary
  abelian groups and checked for irreducibility by enumerating them;
* every other minimal normal subgroup centralizes the first one, and the
  centralizer of a transitive subgroup is semiregular and cheap to build.
"""

from math import isqrt

from .perm import commutator, compose, conjugate, identity, perm_order, power
from .permgrp import (
    DEFAULT_CAPS,
    CapExceeded,
    bsgs_build,
    conjugate_group,
    is_abelian,
    is_transitive,
    normal_closure,
    orbit,
    point_stabilizer,
)


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n):
    return n >= 2 and prime_factors(n) == [n]


def integer_root(x, k):
    """Return ``r`` with ``r**k == x`` or ``None``."""
    if k == 1:
        return x
    if k == 2:
        r = isqrt(x)
        return r if r * r == x else None
    r = round(x ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c > 0 and c ** k == x:
            return c
    return None


def _probes(H, limit=40):
    """Deterministic candidate elements of ``H`` for normal-closure descent."""
    out = []
    seen = set()

    def push(x):
        if x not in seen and any(i != v for i, v in enumerate(x)):
            seen.add(x)
            out.append(x)

    base = list(H.generators) + list(H.strong_gens)
    for g in base:
        o = perm_order(g)
        for p in prime_factors(o):
            push(power(g, o // p))
        push(g)
        if len(out) >= limit:
            return out
    few = list(H.generators)[:6]
    for i, a in enumerate(few):
        for b in few[i + 1:]:
            push(commutator(a, b))
    return out[: limit + 15]


def conjugacy_classes(G, elements=None, cap=None):
    """Partition the elements of ``G`` into conjugacy classes (as lists)."""
    if elements is None:
        elements = list(G.elements(cap=cap))
    index = {e: i for i, e in enumerate(elements)}
    cls_of = [-1] * len(elements)
    classes = []
    for i, e in enumerate(elements):
        if cls_of[i] >= 0:
            continue
        c = len(classes)
        cls_of[i] = c
        members = [e]
        k = 0
        while k < len(members):
            x = members[k]
            k += 1
            for g in G.generators:
                y = conjugate(x, g)
                j = index[y]
                if cls_of[j] < 0:
                    cls_of[j] = c
                    members.append(y)
        classes.append(members)
    return classes


def _minimal_among(groups):
    """Drop duplicates and any group properly containing another."""
    groups = sorted(groups, key=lambda H: H.order)
    kept = []
    for H in groups:
        if any(K.is_subgroup_of(H) for K in kept):
            continue
        kept.append(H)
    return kept


def minimal_normal_by_enumeration(G, caps=DEFAULT_CAPS):
    """Minimal normal subgroups from conjugacy-class enumeration."""
    classes = conjugacy_classes(G, cap=caps.enum)
    n = G.degree
    e = identity(n)
    closures = [normal_closure(G, [c[0]]) for c in classes if c[0] != e]
    return _minimal_among(closures)


def _elementary_reduce(G, N):
    """Shrink an abelian normal ``N`` towards an elementary abelian one."""
    for g in N.generators:
        o = perm_order(g)
        if o > 1 and not is_prime(o):
            p = prime_factors(o)[0]
            C = normal_closure(G, [power(g, o // p)])
            if C.order < N.order:
                return C
    primes = {perm_order(g) for g in N.generators if perm_order(g) > 1}
    if len(primes) > 1:
        p = min(primes)
        g = next(g for g in N.generators if perm_order(g) == p)
        return normal_closure(G, [g])
    return None


def _descend(G, N, within=None):
    """Heuristic descent: replace ``N`` by proper normal closures of probes.

    Closures are taken in ``within`` (defaults to ``G``).
    """
    amb = within or G
    progress = True
    while progress:
        progress = False
        for x in _probes(N):
            C = normal_closure(amb, [x])
            if 1 < C.order < N.order:
                N = C
                progress = True
                break
    return N


def simple_subnormal(N, caps=DEFAULT_CAPS):
    """A simple subgroup ``T`` reached by a chain of normal closures from ``N``.

    The chain makes ``T`` subnormal in ``N``.  Simplicity of a nonabelian
    candidate is certified by enumerating it.
    """
    S = N
    while True:
        if is_abelian(S):
            if is_prime(S.order):
                return S
            for g in S.generators:
                o = perm_order(g)
                if o > 1:
                    x = power(g, o // prime_factors(o)[0])
                    return bsgs_build([x])
        S = _descend(S, S)
        if is_abelian(S):
            continue
        if S.order > caps.enum:
            raise CapExceeded("simplicity certificate needs |T| = %d > %d" % (S.order, caps.enum))
        smaller = None
        e = identity(S.degree)
        for cls in conjugacy_classes(S, cap=caps.enum):
            if cls[0] == e:
                continue
            C = normal_closure(S, [cls[0]])
            if C.order < S.order:
                smaller = C
                break
        if smaller is None:
            return S
        S = smaller


def conjugate_factors(G, T):
    """Distinct ``G``-conjugates of the subgroup ``T``, in discovery order."""
    found = [T]
    k = 0
    while k < len(found):
        X = found[k]
        k += 1
        for g in G.generators:
            Y = conjugate_group(X, g)
            if not any(Y.same_as(Z) for Z in found):
                found.append(Y)
    return found


def one_minimal_normal(G, N=None, caps=DEFAULT_CAPS):
    """A minimal normal subgroup of ``G`` contained in the normal subgroup ``N``."""
    N = N or G
    if N.order == 1:
        raise ValueError("trivial group has no minimal normal subgroup")
    while True:
        N = _descend(G, N)
        if is_abelian(N):
            C = _elementary_reduce(G, N)
            if C is not None:
                N = C
                continue
            if N.order > caps.enum:
                raise CapExceeded("abelian normal subgroup of order %d too large" % N.order)
            elems = [x for x in N.elements() if x != identity(N.degree)]
            smaller = None
            for cls in conjugacy_classes(G, elements=elems + [identity(N.degree)]):
                if cls[0] == identity(N.degree):
                    continue
                C = normal_closure(G, [cls[0]])
                if C.order < N.order:
                    smaller = C
                    break
            if smaller is None:
                return N
            N = smaller
            continue
        T = simple_subnormal(N, caps)
        M = normal_closure(G, list(T.generators))
        if is_abelian(T):
            if M.order < N.order:
                N = M
                continue
            # N is a nonabelian p-group; its derived subgroup is proper.
            gens = N.generators
            a, b = next(
                (a, b)
                for i, a in enumerate(gens)
                for b in gens[i + 1:]
                if compose(a, b) != compose(b, a)
            )
            N = normal_closure(G, [commutator(a, b)])
            continue
        factors = conjugate_factors(G, T)
        if T.order ** len(factors) != M.order:
            raise AssertionError("conjugates of a simple subnormal subgroup do not form a direct product")
        return M


def centralizer_of_transitive(G, N):
    """``C_G(N)`` for a transitive subgroup ``N``; it acts semiregularly."""
    n = G.degree
    Nb = N.with_base((0,))
    stab = Nb.level_generators(1)
    fixed = [x for x in range(n) if all(s[x] == x for s in stab)]
    trans = Nb.transversal(0)
    elems = []
    for beta in fixed:
        c = [0] * n
        for x, t in trans.items():
            c[x] = t[beta]
        c = tuple(c)
        if len(set(c)) != n:
            continue
        if any(compose(c, g) != compose(g, c) for g in N.generators):
            continue
        if G.contains(c):
            elems.append(c)
    return bsgs_build(elems or [identity(n)], degree=n)


def minimal_normal_subgroups(G, caps=DEFAULT_CAPS, method="auto"):
    """All minimal normal subgroups of ``G``, smallest first.

    ``method`` is ``"enumerate"``, ``"structural"`` or ``"auto"`` (enumerate
    when ``|G|`` is within ``caps.enum``).  Raises :class:`CapExceeded` when
    the answer cannot be certified; ``partial`` then holds one certified
    minimal normal subgroup when available.
    """
    if G.order == 1:
        return []
    if method == "enumerate" or (method == "auto" and G.order <= caps.enum):
        return minimal_normal_by_enumeration(G, caps)
    N1 = one_minimal_normal(G, G, caps)
    if not is_transitive(N1):
        raise CapExceeded("intransitive minimal normal subgroup; centralizer search not supported", partial=N1)
    C = centralizer_of_transitive(G, N1)
    found = [N1]
    if C.order > 1:
        e = identity(G.degree)
        for x in C.elements():
            if x != e:
                found.append(normal_closure(G, [x]))
    return _minimal_among(found)


def socle(G, caps=DEFAULT_CAPS):
    mins = minimal_normal_subgroups(G, caps)
    gens = [g for M in mins for g in M.generators]
    return bsgs_build(gens or [identity(G.degree)], degree=G.degree)


def is_simple(G, caps=DEFAULT_CAPS):
    if G.order == 1:
        return False
    if is_abelian(G):
        return is_prime(G.order)
    for x in _probes(G):
        C = normal_closure(G, [x])
        if C.order < G.order:
            return False
    if G.order > caps.enum:
        T = simple_subnormal(G, caps)
        return T.order == G.order
    e = identity(G.degree)
    for cls in conjugacy_classes(G, cap=caps.enum):
        if cls[0] != e and normal_closure(G, [cls[0]]).order < G.order:
            return False
    return True


def is_elementary_abelian(G):
    if not is_abelian(G):
        return False
    orders = {perm_order(g) for g in G.generators} - {1}
    return len(orders) <= 1 and all(is_prime(o) for o in orders)


def socle_factor_probe(N, G=None, caps=DEFAULT_CAPS):
    """``(|T|, k)`` for a nonabelian minimal normal ``N = T^k``.

    With ``G`` given the factors are the ``G``-conjugates of one simple
    subnormal subgroup; without it they are the minimal normal subgroups of
    ``N`` found by enumeration.
    """
    if is_abelian(N):
        raise ValueError("socle_factor_probe needs a nonabelian group")
    factors = simple_factors(N, G, caps)
    t = factors[0].order
    if t ** len(factors) != N.order:
        raise AssertionError("factor orders do not multiply to |N|")
    return t, len(factors)


def simple_factors(N, G=None, caps=DEFAULT_CAPS):
    if G is not None:
        T = simple_subnormal(N, caps)
        return conjugate_factors(G, T)
    if N.order > caps.enum:
        raise CapExceeded("factor split of |N| = %d needs an ambient group" % N.order)
    return minimal_normal_by_enumeration(N, caps)


def projection_order(x_gens, T, caps=DEFAULT_CAPS):
    """Order of the group induced on ``T`` by conjugation with ``x_gens``.

    For ``x`` in a direct product of nonabelian simple groups this is the
    order of the projection onto the factor ``T``.
    """
    elems = list(T.elements(cap=caps.enum))
    index = {e: i for i, e in enumerate(elems)}
    gens = []
    for x in x_gens:
        gens.append(tuple(index[conjugate(t, x)] for t in elems))
    if not gens:
        return 1
    return bsgs_build(gens, degree=len(elems)).order


def orbit_count(G):
    seen = set()
    count = 0
    for x in range(G.degree):
        if x not in seen:
            seen.update(orbit(G, x))
            count += 1
    return count


__all__ = [
    "conjugacy_classes",
    "minimal_normal_subgroups",
    "minimal_normal_by_enumeration",
    "one_minimal_normal",
    "socle",
    "is_simple",
    "is_elementary_abelian",
    "socle_factor_probe",
    "simple_factors",
    "simple_subnormal",
    "centralizer_of_transitive",
    "projection_order",
    "point_stabilizer",
    "orbit_count",
]
