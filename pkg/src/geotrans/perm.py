"""Permutations on {0..n-1} stored as image tuples.

``p[i]`` is the image of point ``i``.  Products are read left to right:
``compose(a, b)`` applies ``a`` first, then ``b``, so ``i^(ab) = (i^a)^b``.
"""

from operator import itemgetter


_POOL = tuple(range(1024))


def _ids(n):
    """``0..n-1`` drawn from one shared pool, so stored permutations share int objects."""
    global _POOL
    if n > len(_POOL):
        _POOL = _POOL + tuple(range(len(_POOL), 2 * n))
    return _POOL[:n]


def identity(n):
    return _ids(n)


def check_perm(p):
    """Raise ``ValueError`` unless ``p`` is a bijection on ``range(len(p))``."""
    n = len(p)
    seen = [False] * n
    for x in p:
        if not (0 <= x < n) or seen[x]:
            raise ValueError("not a permutation: %r" % (p,))
        seen[x] = True
    return tuple(p)


def compose(a, b):
    """Apply ``a`` then ``b``."""
    if len(a) == 1:
        return (b[a[0]],)
    return itemgetter(*a)(b) if a else ()


def compose_all(*perms):
    out = perms[0]
    for p in perms[1:]:
        out = compose(out, p)
    return out


def inverse(p):
    inv = [0] * len(p)
    for i, x in zip(_ids(len(p)), p):
        inv[x] = i
    return tuple(inv)


def conjugate(p, g):
    """``g^-1 p g``: relabel the cycles of ``p`` through ``g``."""
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[g[i]] = g[x]
    return tuple(out)


def commutator(a, b):
    """``a^-1 b^-1 a b``."""
    return compose_all(inverse(a), inverse(b), a, b)


def power(p, k):
    n = len(p)
    if k < 0:
        p, k = inverse(p), -k
    result = identity(n)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def is_identity(p):
    return all(i == x for i, x in enumerate(p))


def cycles(p):
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def perm_order(p):
    from math import lcm

    o = 1
    for c in cycles(p):
        o = lcm(o, len(c))
    return o


def from_cycles(n, *cycs):
    """Build a permutation of degree ``n`` from disjoint cycles."""
    img = list(range(n))
    for c in cycs:
        for k, x in enumerate(c):
            img[x] = c[(k + 1) % len(c)]
    return check_perm(img)


def support(p):
    return [i for i, x in enumerate(p) if i != x]


def fmt_perm(p):
    out = "".join("(%s)" % " ".join(map(str, c)) for c in cycles(p))
    return out or "()"
