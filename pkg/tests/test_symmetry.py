import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geotrans import construct as C
from geotrans.autgrp import automorphism_group
from geotrans.graph import Graph, all_geodesics, bipartition, girth, s_arcs
from geotrans.perm import compose_all, identity
from geotrans.permgrp import CapExceeded, Caps, apply_to_tuple, bsgs_build, orbits, point_stabilizer
from geotrans.symmetry import (
    ActionNotClosed,
    check_line_1_arc,
    check_locally_s_arc_transitive,
    check_point_s_arc_transitive,
    check_s_arc_transitive,
    check_s_geodesic_transitive,
    check_vertex_transitive,
    is_transitive_on,
    orbit_count_on_tuples,
    transitivity_report,
    verify_theorem_2_4,
)

from .test_graph import complete, cycle, graphs


def _all(verdicts):
    return [v.transitive for v in verdicts]


def _random_subgroup(G, rnd, k):
    gens = list(G.generators)
    picks = []
    for _ in range(k):
        word = [rnd.choice(gens) for _ in range(rnd.randint(1, 6))]
        picks.append(compose_all(identity(G.degree), *word))
    return bsgs_build(picks, degree=G.degree)


# -- kernel


def test_kernel_examples(kg62):
    g, act = kg62
    arcs = s_arcs(g, 1)
    assert is_transitive_on(act, arcs) == (True, None)
    ok, wit = is_transitive_on(act, s_arcs(g, 2))
    assert not ok and wit[0] == min(s_arcs(g, 2))
    trivial = bsgs_build([identity(3)])
    assert not is_transitive_on(trivial, [(0,), (1,)])[0]


def test_kernel_rejects_non_invariant_sets(kg62):
    g, act = kg62
    with pytest.raises(ActionNotClosed):
        is_transitive_on(act, s_arcs(g, 1)[:5])
    with pytest.raises(ValueError):
        is_transitive_on(act, [])
    with pytest.raises(CapExceeded):
        is_transitive_on(act, s_arcs(g, 1), cap=10)


def test_witness_tuples_lie_in_different_orbits(kg62):
    g, act = kg62
    ok, (a, b) = is_transitive_on(act, s_arcs(g, 2))
    orbit_of_a = set()
    frontier = [a]
    while frontier:
        t = frontier.pop()
        if t in orbit_of_a:
            continue
        orbit_of_a.add(t)
        frontier.extend(apply_to_tuple(p, t) for p in act.group.generators)
    assert b not in orbit_of_a


# -- s-geodesics and s-arcs


def test_geodesic_examples(kg62):
    g, act = kg62
    assert _all(check_s_geodesic_transitive(g, act, 2)) == [True, True]
    two = C.two_coordinate_graph(3, 3)
    v = check_s_geodesic_transitive(two, C.hamming_group(3, 3), 2)
    assert _all(v) == [True, False] and v[1].witness is not None
    c6 = cycle(6)
    assert _all(check_s_geodesic_transitive(c6, automorphism_group(c6), 3)) == [True] * 3


def test_arc_examples(kg62, foster):
    g, act = kg62
    assert _all(check_s_arc_transitive(g, act, 2)) == [True, False]
    fg, FG = foster
    assert _all(check_s_arc_transitive(fg, FG, 5)) == [True] * 5
    k2 = complete(2)
    assert _all(check_s_arc_transitive(k2, automorphism_group(k2), 1)) == [True]


def test_arc_transitivity_needs_vertex_transitivity():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    A = automorphism_group(star)
    assert not check_vertex_transitive(star, A).transitive
    assert _all(check_s_arc_transitive(star, A, 1)) == [False]


def test_level_must_be_positive(kg62):
    with pytest.raises(ValueError):
        check_s_geodesic_transitive(kg62[0], kg62[1], 0)


def test_two_arcs_and_geodesics_coincide_without_triangles(foster):
    graphs_ = [C.kneser(5, 2), C.hamming(3, 2), C.pg_incidence(2)[0],
               C.standard_double_cover(C.kneser(5, 2)), foster[0]]
    for g in graphs_:
        assert girth(g) >= 4
        A = automorphism_group(g)
        assert _all(check_s_arc_transitive(g, A, 2)) == _all(check_s_geodesic_transitive(g, A, 2))


@given(graphs(max_n=9))
def test_arc_geodesic_agreement_random(g):
    if girth(g) < 4 or not g.edge_count():
        return
    A = automorphism_group(g)
    if not check_vertex_transitive(g, A).transitive:
        return
    assert _all(check_s_arc_transitive(g, A, 2)) == _all(check_s_geodesic_transitive(g, A, 2))


@given(graphs(max_n=9), st.integers(1, 3))
def test_verdicts_match_orbit_counting(g, s):
    A = automorphism_group(g)
    for v, tuples in zip(check_s_geodesic_transitive(g, A, s), [all_geodesics(g, i) for i in range(1, s + 1)]):
        if tuples:
            assert v.transitive == (orbit_count_on_tuples(A, tuples) == 1)


# -- local variants


def test_locally_arc_examples(kg62, heawood):
    g, act = kg62
    inc, S = C.incidence_graph(g)
    ia = C.incidence_action(act, S.lines)
    assert _all(check_locally_s_arc_transitive(inc, ia, 3)) == [True] * 3
    hg, hact = heawood
    assert _all(check_locally_s_arc_transitive(hg, automorphism_group(hg), 4)) == [True] * 4
    assert _all(check_locally_s_arc_transitive(hg, hact, 4)) == [True] * 4
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert _all(check_locally_s_arc_transitive(star, automorphism_group(star), 1)) == [True]


def test_point_arc_examples(kg62, h35):
    g, act = kg62
    inc, S = C.incidence_graph(g)
    ia = C.incidence_action(act, S.lines)
    assert _all(check_point_s_arc_transitive(inc, ia, list(range(g.n)), 4)) == [True] * 4
    hg, HG = h35
    inc, S = C.incidence_graph(hg)
    ia = C.incidence_action(HG, S.lines)
    assert _all(check_point_s_arc_transitive(inc, ia, list(range(hg.n)), 4)) == [True] * 4
    c12, _ = C.incidence_graph(cycle(6))
    side_preserving = automorphism_group(c12, colors=bipartition(c12))
    assert side_preserving.order == 12
    assert _all(check_point_s_arc_transitive(c12, side_preserving, 0, 4)) == [True] * 4


def test_point_side_must_be_invariant():
    c6 = cycle(6)
    with pytest.raises(ActionNotClosed):
        check_point_s_arc_transitive(c6, automorphism_group(c6), 0, 2)
    with pytest.raises(ValueError):
        check_point_s_arc_transitive(cycle(5), automorphism_group(cycle(5)), 0, 2)


def _locally_by_orbits(g, A, s):
    """Level i holds iff there is one orbit of i-arcs per vertex orbit that has any."""
    out = []
    for i in range(1, s + 1):
        arcs = s_arcs(g, i)
        starts = {a[0] for a in arcs}
        with_arcs = sum(1 for o in orbits(A) if set(o) & starts)
        out.append(orbit_count_on_tuples(A, arcs) == with_arcs if arcs else True)
    return out


@given(graphs(max_n=8), st.integers(1, 3))
def test_locally_arc_matches_orbit_count_oracle(g, s):
    A = automorphism_group(g)
    expected = _locally_by_orbits(g, A, s)
    assert _all(check_locally_s_arc_transitive(g, A, s)) == expected


def test_subgroup_monotonicity(kg62):
    g, act = kg62
    rnd = random.Random(11)
    G = act.group
    for _ in range(15):
        H = _random_subgroup(G, rnd, 2)
        full = _all(check_s_geodesic_transitive(g, G, 2))
        sub = _all(check_s_geodesic_transitive(g, H, 2))
        assert all(f or not s for f, s in zip(full, sub))


# -- equivalence of the incidence-graph conditions


def test_equivalence_examples(kg62, h35, psl_coset):
    for g, A in (kg62, h35, psl_coset[:2]):
        rep = verify_theorem_2_4(g, A)
        assert rep.consistent and rep.clause1
    g, act = kg62
    stab = point_stabilizer(act.group, 0)
    rep = verify_theorem_2_4(g, stab)
    assert (rep.clause1, rep.clause2, rep.clause3) == (False, False, False)
    with pytest.raises(C.NotInF):
        verify_theorem_2_4(C.complement_of_hamming(5), C.hamming_group(2, 5))


@given(st.randoms(use_true_random=False), st.integers(1, 3))
def test_equivalence_on_random_subgroups(rnd, k):
    g, act = C.kneser(6, 2), C.kneser_action(6, 2)
    H = _random_subgroup(act.group, rnd, k)
    rep = verify_theorem_2_4(g, H)
    assert rep.consistent


@given(st.randoms(use_true_random=False))
def test_equivalence_on_random_subgroups_of_hamming(rnd):
    g = C.hamming(2, 4)
    H = _random_subgroup(C.hamming_group(2, 4), rnd, 2)
    assert verify_theorem_2_4(g, H).consistent


def test_line_one_arc(kg62):
    g, act = kg62
    inc, S = C.incidence_graph(g)
    ia = C.incidence_action(act, S.lines)
    assert check_line_1_arc(inc, ia, list(range(g.n, inc.n))).transitive


# -- reports


def test_report_fields(kg62):
    g, act = kg62
    rep = transitivity_report(g, act, 2)
    d = rep.as_dict()
    assert (d["s_geodesic_transitive"], d["s_arc_transitive"]) == (2, 1)
    assert d["witnesses"]["s_arc"]


def test_report_respects_caps(kg62):
    with pytest.raises(CapExceeded):
        transitivity_report(kg62[0], kg62[1], 2, caps=Caps(tuples=10))
