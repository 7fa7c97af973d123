from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_frustration, fixture, random_signed_graph, random_simple_connected
from signed_ghw.errors import ArgumentError, DomainError, ResourceError
from signed_ghw.eval_points import (ProjectivePointSet, frustration_index_points,
                                    min_distance_points, zero_count)
from signed_ghw.ghw import code_ghw
from signed_ghw.signed_graph import SignedGraph, frustration_index_switching, is_balanced

seeds = st.integers(0, 2 ** 32 - 1)


def test_point_set_shape():
    x = ProjectivePointSet.from_graph(fixture("ex3"))
    assert len(x) == 6 and x.as_array().shape == (3, 6)
    with pytest.raises(DomainError):
        ProjectivePointSet.from_graph(SignedGraph.from_edges(1, [(1, 1, "+")]))


def test_zero_count_basics():
    x = ProjectivePointSet.from_graph(fixture("ex3"))
    # all-ones form kills exactly the positive links
    assert zero_count(x, [1, 1, 1]) == 3
    assert zero_count(x, [Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)]) == 3
    assert zero_count(x, [1, 1, 1], p=2) == 6
    with pytest.raises(ArgumentError):
        zero_count(x, [0, 0, 0])
    with pytest.raises(ArgumentError):
        zero_count(x, [3, 3, 3], p=3)
    with pytest.raises(ArgumentError):
        zero_count(x, [1, 1])


def test_harary_form_on_balanced_graph():
    g = fixture("ex6").positive().switched([1, 3, 8])
    assert is_balanced(g)
    # the potential of a switching class gives a form vanishing everywhere
    pot = [-1 if v in (1, 3, 8) else 1 for v in range(1, g.s + 1)]
    assert zero_count(ProjectivePointSet.from_graph(g), pot) == g.m


def test_frustration_examples():
    assert frustration_index_points(fixture("ex6")) == 7
    assert frustration_index_points(fixture("ex6").negative()) == 6
    assert frustration_index_points(fixture("ex2")) == 3
    with pytest.raises(DomainError):
        frustration_index_points(fixture("ex3"))
    with pytest.raises(DomainError):
        frustration_index_points(SignedGraph.from_edges(3, [(1, 2, "-")]))


def test_min_distance_examples():
    g6 = fixture("ex6")
    assert [min_distance_points(g6, p) for p in (0, 2, 3, 5)] == [4, 3, 4, 4]
    assert min_distance_points(fixture("ex3"), 0) == 3
    assert min_distance_points(fixture("ex5"), 5) == 2
    assert min_distance_points(fixture("ex1"), 2) == 1
    assert min_distance_points(fixture("ex2"), 0) == 2


def test_min_distance_arguments():
    with pytest.raises(ArgumentError):
        min_distance_points(fixture("ex3"), 4)
    with pytest.raises(DomainError):
        min_distance_points(SignedGraph.from_edges(3, [(1, 2, "-")]), 0)
    with pytest.raises(DomainError):
        # no edges: every form vanishes on the empty point set
        min_distance_points(SignedGraph.from_edges(1, []), 0)
    with pytest.raises(ResourceError):
        min_distance_points(SignedGraph.from_edges(9, [(i, i + 1, "-") for i in range(1, 9)]), 7)


@settings(max_examples=80, deadline=None)
@given(seeds)
def test_frustration_two_ways(seed):
    rng = random.Random(seed)
    s = rng.randint(2, 6)
    g = random_simple_connected(rng, s, rng.randint(0, 6))
    assert frustration_index_points(g) == frustration_index_switching(g) == brute_frustration(g)


@settings(max_examples=80, deadline=None)
@given(seeds, st.sampled_from([0, 2, 3]))
def test_min_distance_matches_code_route(seed, p):
    g = random_signed_graph(random.Random(seed), max_s=5, max_m=9)
    if not g.is_connected or g.has_positive_loops or g.m == 0:
        return
    if p == 2 and any(e.is_loop for e in g.edges):
        return
    assert min_distance_points(g, p) == code_ghw(g, p, "C", 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_frustration_bounds_min_distance(seed):
    rng = random.Random(seed)
    g = random_simple_connected(rng, rng.randint(2, 6), rng.randint(0, 8))
    if is_balanced(g):
        return
    assert frustration_index_switching(g) >= min_distance_points(g, 0)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 3))
def test_opposite_forms_have_equal_zeros(seed, p_index):
    rng = random.Random(seed)
    g = random_signed_graph(rng, max_s=5, max_m=9, loops=False)
    p = (0, 2, 3, 5)[p_index]
    h = [rng.randint(-3, 3) for _ in range(g.s)]
    if g.has_positive_loops or all((a % p if p else a) == 0 for a in h):
        return
    x = ProjectivePointSet.from_graph(g)
    assert zero_count(x, h, p) == zero_count(x, [-a for a in h], p)
