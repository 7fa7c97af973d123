from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import (EX1_PAIRS, TRIANGLE_PAIRS, brute_balanced, brute_cut_counts,
                     brute_cycles, brute_frustration, brute_min_removal, fixture,
                     random_signed_graph)
from signed_ghw.errors import ArgumentError, DomainError
from signed_ghw.signed_graph import (SignedGraph, balanced_component_count, bowties,
                                     cogirth_r, connected_components, cycles,
                                     edge_connectivity_r, frustration_index_switching,
                                     graph_circuits, graph_cocircuits, is_balanced)


@st.composite
def signed_graphs(draw, max_s=5, max_m=8):
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_signed_graph(random.Random(seed), max_s=max_s, max_m=max_m)


def test_construction_validates_vertices():
    with pytest.raises(ArgumentError):
        SignedGraph.from_edges(2, [(1, 3, "+")])
    with pytest.raises(ArgumentError):
        SignedGraph.from_edges(2, [(1, 2, "*")])


def test_isolated_vertices_are_balanced_components():
    g = SignedGraph.from_edges(3, [])
    assert connected_components(g) == 3
    assert balanced_component_count(g) == 3


def test_negative_loop_unbalances_its_component():
    g = SignedGraph.from_edges(2, [(1, 1, "-"), (1, 2, "+")])
    assert not is_balanced(g)
    assert balanced_component_count(g, removed=[1]) == 1
    assert frustration_index_switching(g) == 1


def test_positive_loop_is_harmless():
    g = SignedGraph.from_edges(1, [(1, 1, "+")])
    assert is_balanced(g)
    assert [c.edges for c in cycles(g)] == [frozenset({1})]


def test_triangle_cycles_and_bowties():
    g = fixture("ex3")
    cyc = cycles(g)
    # one digon per side plus eight triangles
    assert sum(len(c.edges) == 2 for c in cyc) == 3
    assert sum(len(c.edges) == 3 for c in cyc) == 8
    assert {c.edges for c in cyc if c.balanced} == {
        frozenset(x) for x in ({1, 3, 5}, {2, 4, 5}, {2, 3, 6}, {1, 4, 6})}
    assert frozenset({1, 2, 3, 4}) in set(bowties(g))


def test_bridges_and_connectivity():
    g = SignedGraph.from_edges(11, [(u, v, "+") for u, v in EX1_PAIRS])
    assert g.bridges() == [8]
    assert g.is_connected and g.is_simple
    assert edge_connectivity_r(g, 1) == 1


def test_cogirth_needs_connected_unbalanced():
    g = fixture("ex4")
    with pytest.raises(DomainError):
        cogirth_r(g, 1)
    with pytest.raises(DomainError):
        cogirth_r(fixture("ex5"), 4)
    assert [cogirth_r(fixture("ex5"), r) for r in (1, 2, 3)] == [2, 4, 6]
    with pytest.raises(DomainError):
        edge_connectivity_r(g, 3)


def test_cogirth_defined_for_every_r():
    # adding edges back one at a time lowers c_0 by at most one per edge
    g = SignedGraph.from_edges(2, [(1, 1, "-"), (1, 2, "-")])
    assert [cogirth_r(g, r) for r in (1, 2)] == [1, 2]
    g1 = SignedGraph.from_edges(1, [(1, 1, "-")])
    assert cogirth_r(g1, 1) == 1


def test_switching_is_a_symmetry():
    g = fixture("ex6")
    h = g.switched([2, 5, 7])
    assert frustration_index_switching(h) == frustration_index_switching(g) == 7
    assert is_balanced(g.positive().switched([1, 4]))


def test_frustration_of_negative_examples():
    g = SignedGraph.from_edges(11, [(u, v, "-") for u, v in EX1_PAIRS])
    assert frustration_index_switching(g) == 3
    t = SignedGraph.from_edges(3, [(u, v, "+-"[i % 2]) for i, (u, v) in enumerate(TRIANGLE_PAIRS)])
    assert frustration_index_switching(t) == 3


@settings(max_examples=120, deadline=None)
@given(signed_graphs())
def test_balance_and_counts_against_bfs(g):
    assert is_balanced(g) == brute_balanced(g)
    for removed in ([], [1], [1, 2]):
        removed = [j for j in removed if j <= g.m]
        assert (connected_components(g, removed),
                balanced_component_count(g, removed)) == brute_cut_counts(g, removed)


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_s=5, max_m=7))
def test_frustration_against_deletion_search(g):
    assert frustration_index_switching(g) == brute_frustration(g)


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_s=5, max_m=7))
def test_cycles_against_degree_two_subsets(g):
    assert {c.edges for c in cycles(g)} == brute_cycles(g)
    for c in cycles(g):
        assert c.balanced == brute_balanced(g.edge_subgraph(sorted(c.edges)))


@settings(max_examples=80, deadline=None)
@given(signed_graphs(max_s=5, max_m=7))
def test_cut_invariants_against_subsets(g):
    if not g.is_connected:
        return
    for r in range(1, g.s):
        assert edge_connectivity_r(g, r) == brute_min_removal(g, r + 1, 0)
    if not is_balanced(g):
        for r in range(1, g.s + 1):
            assert cogirth_r(g, r) == brute_min_removal(g, r, 1)


@settings(max_examples=60, deadline=None)
@given(signed_graphs(max_s=5, max_m=7))
def test_circuits_and_cocircuits_are_clutters(g):
    for family in (graph_circuits(g), graph_cocircuits(g)):
        for a in family:
            assert not any(b < a for b in family)
