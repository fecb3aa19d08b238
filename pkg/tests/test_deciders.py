from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import G, graphs, k
from strongeq.deciders import (
    EmptyInput,
    Verdict,
    decide,
    decide_edge2color,
    decide_hamiltonian,
    decide_kcolor,
    decide_kconnectivity,
    decide_planarity,
    decide_subgraph,
    edge2_path_condition,
    min_equivalent_subgraph,
    np_reduce_kcolor,
)
from strongeq.graphs import Graph, all_graphs, build_complete_multipartite, build_cycle, build_path, build_star
from strongeq.oracle import OracleBudget, refute_bounded
from strongeq.properties import PropertySelector, is_k_connected
from strongeq.witnesses import verify_witness

EQ, NEQ, UNK = Verdict.EQUIVALENT, Verdict.NOT_EQUIVALENT, Verdict.UNKNOWN
K33 = build_complete_multipartite([{"a", "b", "c"}, {"d", "e", "f"}])

SELECTORS = [
    PropertySelector.hamiltonian(),
    PropertySelector.planarity(),
    PropertySelector.subgraph(k("xyz")),
    PropertySelector.subgraph(build_star("x", "yzw")),
    PropertySelector.kcolor(2),
    PropertySelector.kcolor(3),
    PropertySelector.edge2color(),
    PropertySelector.kconn(1),
    PropertySelector.kconn(2),
    PropertySelector.kconn_psi(2),
]


def test_verdict_exit_codes():
    assert [v.exit_code for v in (EQ, NEQ, UNK)] == [0, 1, 2]


def test_hamiltonian_examples():
    g = k("abc")
    assert decide_hamiltonian(g, g).verdict is EQ
    assert decide_hamiltonian(g, g.remove("a", "b").add("a", "d")).verdict is NEQ
    assert decide_hamiltonian(G("ab"), Graph()).verdict is NEQ


def test_planarity_examples():
    assert decide_planarity(k("abcde"), K33).verdict is EQ
    assert decide_planarity(k("abcd"), k("abcd")).verdict is EQ
    assert decide_planarity(k("abcd"), build_cycle("abcd")).verdict is NEQ


def test_subgraph_examples():
    c4 = build_cycle("wxyz")
    assert decide_subgraph(c4, G("ab", "bc"), G("ab", "bc")).verdict is EQ
    star = build_star("x", "yzw")
    s = build_star("a", "bcd")
    assert decide_subgraph(star, s, s.add("e", "f")).verdict is EQ
    p5 = build_path("vwxyz")
    out = decide_subgraph(p5, k("abcde"), k("abcde").remove("a", "b"))
    assert out.verdict is UNK and "not characterized" in out.reason
    # exactly one side contains the pattern: always decidable
    assert decide_subgraph(p5, k("abcde"), G("ab")).verdict is NEQ


def test_kcolor_examples():
    assert decide_kcolor(k("abc"), k("abcd"), 2).verdict is EQ
    p = G("ab", "bc")
    assert decide_kcolor(p, p, 2).verdict is EQ
    assert decide_kcolor(G("ab", "cd"), G("ac", "bd"), 2).verdict is NEQ
    with pytest.raises(ValueError):
        decide_kcolor(p, p, 0)


def test_kcolor_one_coloring_remark():
    assert decide_kcolor(Graph(), Graph(), 1).verdict is EQ
    assert decide_kcolor(G("ab"), k("abcd"), 1).verdict is EQ
    assert decide_kcolor(G("ab"), Graph(), 1).verdict is NEQ


def test_edge2_examples():
    assert decide_edge2color(build_star("a", "bcd"), k("abc")).verdict is EQ
    assert decide_edge2color(G("ab", "bc"), G("ab", "bc")).verdict is EQ
    assert decide_edge2color(G("ab", "bc"), G("ac", "cb")).verdict is NEQ


def test_edge2_same_path_profile_is_not_enough():
    """Equal endpoints and parity, yet a repeated edge separates the pair."""
    g, h = G("ab", "bc", "cd"), G("ac", "cb", "bd")
    assert edge2_path_condition(g, h)
    assert decide_edge2color(g, h, method="paths").verdict is EQ
    assert decide_edge2color(g, h).verdict is NEQ
    f = refute_bounded(PropertySelector.edge2color(), g, h, OracleBudget(2))
    assert f == G("ab")
    assert verify_witness(PropertySelector.edge2color(), g, h, f)


def test_edge2_path_condition_disagreements_on_four_vertices():
    prop = PropertySelector.edge2color()
    graphs4 = all_graphs("abcd")
    bad = []
    for g, h in combinations(graphs4, 2):
        by_paths = decide_edge2color(g, h, method="paths").verdict
        exact = decide_edge2color(g, h).verdict
        if by_paths != exact:
            assert by_paths is EQ and exact is NEQ
            assert refute_bounded(prop, g, h, OracleBudget(2)) is not None
            bad.append((g, h))
    # the 12 Hamiltonian paths pair up by endpoints (6 pairs), and the 3 distinct C4s give 3 pairs
    assert len(bad) == 9
    assert sum(len(g) == 4 for g, _ in bad) == 3


def test_kconn_examples():
    g = build_cycle("abcd")
    for kk in (1, 2, 3):
        assert decide_kconnectivity(g, g, kk).verdict is EQ
    assert decide_kconnectivity(build_path("abcd"), build_star("a", "bcd"), 1).verdict is EQ
    assert decide_kconnectivity(build_path("abcd"), build_star("a", "bcd"), 2).verdict is NEQ
    assert decide_kconnectivity(G("ab"), G("ab", "bc"), 1).verdict is NEQ


def test_kconn_two_refuted_by_two_edge_extension():
    g, h = G("ac", "ad", "bc"), G("ac", "ad", "bc", "cd")
    prop = PropertySelector.kconn(2)
    assert decide(prop, g, h).verdict is NEQ
    f = Graph.from_edges([("a", "_0"), ("b", "_0")])
    assert verify_witness(prop, g, h, f)
    assert refute_bounded(prop, g, h, OracleBudget(1)) is not None


def test_np_reduction_examples():
    g, h = np_reduce_kcolor(G("ab"), 3)
    assert g == G("ab").add("_0", "_1") and h == g.add("a", "_0")
    assert decide_kcolor(g, h, 3).verdict is NEQ
    g, h = np_reduce_kcolor(k("abcd"), 3)
    assert decide_kcolor(g, h, 3).verdict is EQ
    g, h = np_reduce_kcolor(build_cycle("abcde"), 3)
    assert decide_kcolor(g, h, 3).verdict is NEQ
    with pytest.raises(EmptyInput):
        np_reduce_kcolor(Graph(), 3)
    with pytest.raises(ValueError):
        np_reduce_kcolor(G("ab"), 2)


def test_min_subgraph_examples():
    assert len(min_equivalent_subgraph(k("abc"), 1).subgraph) == 2
    assert min_equivalent_subgraph(G("ab"), 1).subgraph == G("ab")
    res = min_equivalent_subgraph(k("abcde"), 2)
    assert len(res.subgraph) == 5 and is_k_connected(res.subgraph, 2)
    assert decide_kconnectivity(res.subgraph, k("abcde"), 2).verdict is EQ
    cut = min_equivalent_subgraph(k("abcde"), 2, budget=10)
    assert cut.subgraph is None and cut.reason == "budget exceeded"


@settings(max_examples=200)
@given(graphs(5), graphs(5))
def test_kcolor_two_fast_path_matches_enumeration(g, h):
    assert decide_kcolor(g, h, 2).verdict is decide_kcolor(g, h, 2, method="enumerate").verdict


@settings(max_examples=100)
@given(graphs(5), graphs(5))
def test_kcolor_one_fast_path_matches_enumeration(g, h):
    assert decide_kcolor(g, h, 1).verdict is decide_kcolor(g, h, 1, method="enumerate").verdict


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SELECTORS), graphs(5), graphs(5), graphs(5))
def test_decider_is_symmetric_reflexive_and_a_congruence(prop, g, h, f):
    out = decide(prop, g, h).verdict
    assert decide(prop, h, g).verdict is out
    assert decide(prop, g, g).verdict is EQ
    if out is EQ:
        assert decide(prop, g | f, h | f).verdict is EQ


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SELECTORS), graphs(5), graphs(5))
def test_base_difference_gets_empty_witness(prop, g, h):
    if prop.holds(g) != prop.holds(h):
        out = decide(prop, g, h, with_witness=True)
        assert out.verdict is NEQ
        assert out.witness.extension == Graph() and out.witness.construction == "base"


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SELECTORS), graphs(4), graphs(4))
def test_equivalent_implies_base_equivalent(prop, g, h):
    if decide(prop, g, h).verdict is EQ:
        assert prop.holds(g) == prop.holds(h)
