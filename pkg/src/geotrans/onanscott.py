"""Primitivity, quasiprimitivity and O'Nan-Scott type recognition.

The decision tree works from the minimal normal subgroups.  Any step that
cannot be certified within the caps yields ``Unresolved`` with whatever
diagnostics were gathered, never a guess.
"""

from dataclasses import dataclass, field

from .normal import (
    is_elementary_abelian,
    minimal_normal_subgroups,
    orbit_count,
    projection_order,
    simple_factors,
    socle,
    socle_factor_probe as _probe,
)
from .permgrp import (
    DEFAULT_CAPS,
    CapExceeded,
    NotTransitive,
    apply_to_set,
    blocks,
    canonical_set,
    induced_action,
    is_abelian,
    is_regular,
    is_transitive,
    point_stabilizer,
)

TYPES = ("HA", "HS", "HC", "AS", "SD", "CD", "TW", "PA")
ALLOWED_FOR_2GT = ("HA", "PA", "AS", "TW", "SD")


@dataclass
class TypeVerdict:
    quasiprimitive: bool
    primitive: bool
    type: str
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "type": self.type,
            "quasiprimitive": self.quasiprimitive,
            "primitive": self.primitive,
            "diagnostics": dict(sorted(self.diagnostics.items())),
        }


def _group(action):
    return getattr(action, "group", action)


def is_primitive(G):
    G = _group(G)
    if not is_transitive(G):
        raise NotTransitive("group is not transitive")
    return blocks(G) is None


def is_quasiprimitive(G, caps=DEFAULT_CAPS):
    """Every minimal normal subgroup transitive.

    An intransitive normal subgroup found before a cap is hit still
    certifies ``False``; otherwise the cap propagates.
    """
    G = _group(G)
    if not is_transitive(G):
        raise NotTransitive("group is not transitive")
    try:
        mins = minimal_normal_subgroups(G, caps)
    except CapExceeded as exc:
        if exc.partial is not None and not is_transitive(exc.partial):
            return False
        raise
    return all(is_transitive(M) for M in mins)


def socle_factor_probe(N, G=None, caps=DEFAULT_CAPS):
    """``(|T|, k)`` with ``N = T^k`` for a nonabelian minimal normal subgroup."""
    return _probe(_group(N), None if G is None else _group(G), caps)


def _not_qp(primitive, diag, N):
    diag["intransitive_normal_order"] = N.order
    diag["intransitive_normal_orbits"] = orbit_count(N)
    return TypeVerdict(False, primitive, "NotQuasiprimitive", diag)


def classify(G, caps=DEFAULT_CAPS):
    """O'Nan-Scott type of a transitive permutation group."""
    G = _group(G)
    if not is_transitive(G):
        raise NotTransitive("group is not transitive")
    diag = {"degree": G.degree, "order": G.order}
    primitive = blocks(G) is None
    try:
        mins = minimal_normal_subgroups(G, caps)
    except CapExceeded as exc:
        if exc.partial is not None and not is_transitive(exc.partial):
            return _not_qp(primitive, diag, exc.partial)
        diag["reason"] = str(exc)
        return TypeVerdict(None, primitive, "Unresolved", diag)
    diag["minimal_normal_count"] = len(mins)
    diag["minimal_normal_orders"] = [M.order for M in mins]
    if not mins:
        # only the trivial group on one point gets here
        return TypeVerdict(True, primitive, "Unresolved", dict(diag, reason="trivial group"))
    for M in mins:
        if not is_transitive(M):
            return _not_qp(primitive, diag, M)
    soc = socle(G, caps) if len(mins) > 1 else mins[0]
    diag["socle_order"] = soc.order
    N = mins[0]
    diag["socle_regular"] = is_regular(soc)
    try:
        return _type_of(G, mins, N, primitive, diag, caps)
    except CapExceeded as exc:
        diag["reason"] = str(exc)
        return TypeVerdict(True, primitive, "Unresolved", diag)


def _type_of(G, mins, N, primitive, diag, caps):
    if len(mins) == 1 and is_abelian(N):
        elem = is_elementary_abelian(N)
        reg = is_regular(N)
        diag.update(elementary_abelian=elem, factor_count=len(N.generators))
        if elem and reg:
            return TypeVerdict(True, primitive, "HA", diag)
        diag["reason"] = "abelian socle that is not elementary abelian and regular"
        return TypeVerdict(True, primitive, "Unresolved", diag)
    if len(mins) == 2:
        A, B = mins
        if is_abelian(A) or is_abelian(B) or not (is_regular(A) and is_regular(B)):
            diag["reason"] = "two minimal normal subgroups not both regular and nonabelian"
            return TypeVerdict(True, primitive, "Unresolved", diag)
        t, k = socle_factor_probe(A, G, caps)
        diag.update(factor_order=t, factor_count=k)
        return TypeVerdict(True, primitive, "HS" if k == 1 else "HC", diag)
    if len(mins) != 1:
        diag["reason"] = "more than two transitive minimal normal subgroups"
        return TypeVerdict(True, primitive, "Unresolved", diag)
    t, k = socle_factor_probe(N, G, caps)
    diag.update(factor_order=t, factor_count=k)
    if k == 1:
        return TypeVerdict(True, primitive, "AS", diag)
    if is_regular(N):
        return TypeVerdict(True, primitive, "TW", diag)
    Na = point_stabilizer(N, 0)
    diag["socle_stabilizer_order"] = Na.order
    factors = simple_factors(N, G, caps)
    proj = [projection_order(Na.generators, T, caps) for T in factors]
    diag["projection_orders"] = proj
    j = 0
    while t ** (j + 1) <= Na.order and Na.order % t ** (j + 1) == 0:
        j += 1
    full = all(p == t for p in proj)
    if full and Na.order == t:
        return TypeVerdict(True, primitive, "SD", diag)
    if full and Na.order == t**j and 1 < j < k:
        return TypeVerdict(True, primitive, "CD", diag)
    if all(1 < p < t for p in proj):
        return TypeVerdict(True, primitive, "PA", diag)
    diag["reason"] = "socle stabilizer projections fit no type"
    return TypeVerdict(True, primitive, "Unresolved", diag)


@dataclass
class CliqueActionReport:
    vertex: TypeVerdict
    clique: TypeVerdict
    socle_clique_orbits: int = None
    remark_check: dict = None

    @property
    def pair(self):
        return self.vertex.type, self.clique.type

    def as_dict(self):
        return {
            "vertex_type": self.vertex.as_dict(),
            "clique_type": self.clique.as_dict(),
            "vertex_socle_orbits_on_cliques": self.socle_clique_orbits,
            "regular_both_sides_check": self.remark_check,
        }


def check_clique_action_type(g, action, caps=DEFAULT_CAPS):
    """Classify a vertex action and its induced action on maximal cliques.

    Also reports how many orbits the vertex socle has on cliques, and when
    both sides come out HA or TW checks that ``m = r + 1``.
    """
    from .graph import f_membership, maximal_cliques
    from .construct import NotInF

    fm = f_membership(g)
    if fm is None:
        raise NotInF("graph is not in any F(m, r)")
    G = _group(action)
    cliques = maximal_cliques(g)
    C, _ = induced_action(G, cliques, apply_to_set, key=canonical_set)
    vert = classify(G, caps)
    cliq = classify(C, caps)
    orbits_on_cliques = None
    try:
        soc = socle(G, caps)
        S, _ = induced_action(soc, cliques, apply_to_set, key=canonical_set)
        orbits_on_cliques = orbit_count(S)
    except CapExceeded:
        pass
    remark = None
    if vert.type == cliq.type and vert.type in ("HA", "TW"):
        m, r = fm
        remark = {"m": m, "r": r, "holds": m == r + 1}
    return CliqueActionReport(vert, cliq, orbits_on_cliques, remark)
