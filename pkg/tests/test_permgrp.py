import random
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from geotrans import construct as C
from geotrans.perm import (
    check_perm,
    compose,
    compose_all,
    cycles,
    from_cycles,
    identity,
    inverse,
    perm_order,
    power,
)
from geotrans.permgrp import (
    CapExceeded,
    Caps,
    apply_to_set,
    blocks,
    bsgs_build,
    canonical_set,
    induced_action,
    is_primitive,
    is_transitive,
    normal_closure,
    orbit,
    orbit_of_object,
    orbits,
    point_stabilizer,
    setwise_stabilizer,
)
from geotrans.verify import brute_closure

perm_st = st.integers(min_value=2, max_value=8).flatmap(
    lambda n: st.lists(st.permutations(list(range(n))).map(tuple), min_size=1, max_size=3)
)


def _sympy_order(gens):
    return PermutationGroup([Permutation(list(p)) for p in gens]).order()


# -- permutations


def test_compose_applies_left_first():
    a = from_cycles(3, (0, 1))
    b = from_cycles(3, (1, 2))
    assert compose(a, b)[0] == b[a[0]] == 2


def test_inverse_power_order():
    p = from_cycles(7, (0, 1, 2), (3, 4))
    assert compose(p, inverse(p)) == identity(7)
    assert perm_order(p) == 6
    assert power(p, 6) == identity(7)
    assert power(p, -1) == inverse(p)
    assert sorted(len(c) for c in cycles(p)) == [2, 3]


def test_check_perm_rejects_non_bijection():
    with pytest.raises(ValueError):
        check_perm((0, 0, 1))


# -- bsgs and orders


def test_orders_of_standard_groups():
    assert C.sym(4).order == 24
    assert C.psl2(23).order == 6072
    assert bsgs_build([identity(5)]).order == 1
    assert C.alt(5).order == 60


def test_kneser_automorphism_order(kg62):
    assert kg62[1].group.order == 720


def test_wreath_product_order():
    W = C.wreath_product_action(C.sym(5), 2)
    assert (W.degree, W.order) == (25, 28800)
    assert len(brute_closure(W.generators, 25)) == 28800


@given(perm_st)
def test_order_matches_sympy(gens):
    assert bsgs_build(gens).order == _sympy_order(gens)


@given(perm_st, st.randoms(use_true_random=False))
def test_membership_matches_sympy(gens, rnd):
    G = bsgs_build(gens)
    S = PermutationGroup([Permutation(list(p)) for p in gens])
    n = G.degree
    for _ in range(5):
        p = list(range(n))
        rnd.shuffle(p)
        assert G.contains(tuple(p)) == S.contains(Permutation(p))


@given(perm_st, st.lists(st.integers(0, 20), max_size=12))
def test_random_words_are_members(gens, word):
    G = bsgs_build(gens)
    x = compose_all(identity(G.degree), *[gens[i % len(gens)] for i in word])
    assert G.contains(x)
    assert G.contains(inverse(x))


@given(perm_st)
def test_elements_equal_brute_closure(gens):
    G = bsgs_build(gens)
    elems = set(G.elements())
    assert len(elems) == G.order
    assert elems == brute_closure(gens, G.degree)


def test_odd_permutation_not_in_alternating():
    assert not C.alt(5).contains(from_cycles(5, (0, 1)))
    assert C.alt(5).contains(identity(5))


def test_elements_respects_cap():
    with pytest.raises(CapExceeded):
        list(C.sym(8).elements(cap=100))


def test_caps_parse_and_reject():
    c = Caps.parse("enum=10,degree=5")
    assert (c.enum, c.degree) == (10, 5)
    with pytest.raises(ValueError):
        Caps.parse("bogus=1")
    with pytest.raises(ValueError):
        Caps.parse("enum=x")


# -- orbits and stabilizers


def test_orbit_examples():
    assert sorted(orbit(C.psl2(23), 0)) == list(range(24))
    assert orbit(bsgs_build([identity(5)]), 3) == [3]
    W = C.wreath_product_action(C.sym(5), 2)
    one_coordinate = bsgs_build(W.generators[:2], degree=25)
    assert sorted(orbit(one_coordinate, 0)) == [0, 5, 10, 15, 20]
    base = normal_closure(W, W.generators[:2])
    assert base.order == 14400
    assert sorted(orbit(base, 0)) == list(range(25))


def test_orbit_of_object_examples():
    H = C.hamming_group(2, 5)
    arcs = [(u, v) for u, v in C.hamming(2, 5).edges()] + [(v, u) for u, v in C.hamming(2, 5).edges()]
    assert len(orbit_of_object(H, arcs[0], lambda g, t: tuple(g[x] for x in t))) == 200
    assert orbit_of_object(bsgs_build([identity(4)]), (1, 2), lambda g, t: tuple(g[x] for x in t)) == [(1, 2)]
    pairs = orbit_of_object(C.sym(6), frozenset({1, 2}), apply_to_set, key=canonical_set)
    assert len(pairs) == 15


def test_point_stabilizer_examples(kg62, psl_coset):
    assert point_stabilizer(C.sym(4), 0).order == 6
    assert point_stabilizer(kg62[1].group, 0).order == 48
    _, act, _ = psl_coset
    assert point_stabilizer(act.group, 0).order == 24


@given(perm_st)
def test_orbit_stabilizer(gens):
    G = bsgs_build(gens)
    for o in orbits(G):
        assert len(o) * point_stabilizer(G, o[0]).order == G.order


def test_setwise_stabilizer_examples(kg62):
    assert setwise_stabilizer(C.sym(4), [0, 1]).order == 4
    assert setwise_stabilizer(C.sym(4), range(4)).order == 24
    A = kg62[1]
    index = {tuple(lab): i for i, lab in enumerate(A.labels)}
    clique = [index[(0, 1)], index[(2, 3)], index[(4, 5)]]
    S = setwise_stabilizer(A.group, clique)
    assert S.order == 48
    brute = [x for x in A.group.elements() if {x[v] for v in clique} == set(clique)]
    assert len(brute) == 48
    assert all(S.contains(x) for x in brute)


@given(perm_st, st.data())
def test_setwise_stabilizer_matches_brute(gens, data):
    G = bsgs_build(gens)
    n = G.degree
    subset = data.draw(st.sets(st.integers(0, n - 1), max_size=n))
    S = setwise_stabilizer(G, subset)
    brute = [x for x in G.elements() if {x[v] for v in subset} == set(subset)]
    assert S.order == len(brute)


# -- normal closure


def _brute_normal_closure(G, xs):
    elems = list(G.elements())
    conj = {compose_all(inverse(g), x, g) for x in xs for g in elems}
    return brute_closure(list(conj) or [identity(G.degree)], G.degree)


def test_normal_closure_examples():
    S5 = C.sym(5)
    assert normal_closure(S5, [from_cycles(5, (0, 1, 2))]).order == 60
    assert normal_closure(S5, [identity(5)]).order == 1
    W = C.wreath_product_action(C.sym(3), 2)
    x = W.generators[0]
    assert normal_closure(W, [x]).order == len(_brute_normal_closure(W, [x]))


@given(perm_st, st.data())
def test_normal_closure_matches_brute(gens, data):
    G = bsgs_build(gens)
    x = data.draw(st.sampled_from(gens))
    N = normal_closure(G, [x])
    assert set(N.elements()) == _brute_normal_closure(G, [x])


# -- blocks


def _brute_primitive(G):
    """Minimal block through {0, d} by union-find over all group elements."""
    n = G.degree
    elems = list(G.elements())
    for d in range(1, n):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        pairs = [(0, d)]
        changed = True
        while changed:
            changed = False
            for a, b in list(pairs):
                for g in elems:
                    u, v = find(g[a]), find(g[b])
                    if u != v:
                        parent[u] = v
                        pairs.append((g[a], g[b]))
                        changed = True
        if len({find(x) for x in range(n)}) > 1:
            return False
    return True


def test_blocks_examples():
    c4 = bsgs_build([from_cycles(4, (0, 1, 2, 3))])
    assert sorted(map(sorted, blocks(c4))) == [[0, 2], [1, 3]]
    assert blocks(C.sym(5)) is None
    H24 = C.hamming_group(2, 4)
    assert is_primitive(H24) == _brute_primitive(H24) is True


@given(perm_st)
def test_primitivity_matches_brute(gens):
    G = bsgs_build(gens)
    if not is_transitive(G) or G.degree > 7:
        return
    assert (blocks(G) is None) == _brute_primitive(G)


@given(perm_st)
def test_block_system_is_invariant(gens):
    G = bsgs_build(gens)
    if not is_transitive(G):
        return
    b = blocks(G)
    if b is None:
        return
    system = {frozenset(x) for x in b}
    assert len(system) > 1 and len({len(x) for x in system}) == 1
    for g in gens:
        assert {frozenset(g[v] for v in x) for x in system} == system


def test_induced_action_on_pairs():
    pairs = [frozenset(c) for c in combinations(range(5), 2)]
    G, labels = induced_action(C.sym(5), pairs, apply_to_set)
    assert G.degree == 10 and G.order == 120
    assert sorted(map(sorted, labels)) == sorted(map(sorted, pairs))


def test_same_as_and_subgroup():
    S4 = C.sym(4)
    other = bsgs_build([tuple(p) for p in permutations(range(4))][1:4])
    assert bsgs_build(S4.generators).same_as(S4)
    assert C.alt(4).is_subgroup_of(S4)
    assert not S4.is_subgroup_of(C.alt(4))
    assert other.is_subgroup_of(S4)


def test_deterministic_build():
    rnd = random.Random(7)
    gens = []
    for _ in range(3):
        p = list(range(9))
        rnd.shuffle(p)
        gens.append(tuple(p))
    a, b = bsgs_build(gens), bsgs_build(gens)
    assert a.base == b.base and a.strong_gens == b.strong_gens
