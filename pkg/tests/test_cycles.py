from __future__ import annotations

import math
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_signed_graphs
from sgs.constructions import BaseBicyclicSpec, base_bicyclic
from sgs.cycles import (MAX_CYCLOMATIC, cycle_sign_vector, enumerate_two_regular, fundamental_cycles,
                        spanning_tree)
from sgs.errors import CapExceededError, NotConnectedError
from sgs.graph import complete_graph, cycle_graph, disjoint_union, path_graph, switch
from sgs.poly import simple_cycles


def test_triangle_tree():
    t = spanning_tree(cycle_graph(3))
    assert t.tree_edges == {(0, 1), (0, 2)}
    assert t.cotree_edges == ((1, 2),)
    [c] = fundamental_cycles(cycle_graph(3), t)
    assert c.length == 3 and c.parity == 1


def test_tree_and_k4():
    assert spanning_tree(path_graph(4)).k == 0
    assert spanning_tree(complete_graph(4)).k == 3


def test_disconnected_rejected():
    with pytest.raises(NotConnectedError):
        spanning_tree(disjoint_union(path_graph(2), path_graph(1)))


def test_theta_fundamental_triangles():
    g = base_bicyclic(BaseBicyclicSpec("theta", (1, 2, 2)))
    cycles = fundamental_cycles(g)
    assert [c.length for c in cycles] == [3, 3]
    # the tree contains uv, so both triangles go through it
    assert all((0, 1) in c.edge_set for c in cycles)


def test_positive_hexagon():
    [c] = fundamental_cycles(cycle_graph(6))
    assert (c.length, c.sign, c.parity) == (6, 1, 0)


def test_catalog_sizes():
    assert len(enumerate_two_regular(cycle_graph(3))) == 1
    cat = enumerate_two_regular(complete_graph(4))
    assert len(cat) == 7
    assert sorted(m.vertex_count for m in cat.all) == [3, 3, 3, 3, 4, 4, 4]
    assert all(m.p == 1 for m in cat.all)


def test_bowtie_has_two_triangle_member():
    g = base_bicyclic(BaseBicyclicSpec("bowtie", (1, 3, 3)))
    cat = enumerate_two_regular(g)
    [both] = [m for m in cat.all if m.p == 2]
    assert both.vertex_count == 6 and both.parity == 0
    assert both.component_cycles == ((0, 2, 3), (1, 4, 5))


@given(connected_signed_graphs(max_n=7))
@settings(max_examples=60)
def test_catalog_invariants(g):
    cat = enumerate_two_regular(g)
    parts = cat.c0_pos + cat.c0_neg + cat.c1_pos + cat.c1_neg
    assert sorted(m.mask for m in parts) == sorted(m.mask for m in cat.all)
    fund = fundamental_cycles(g)
    for m in cat.all:
        assert m.vertex_count == len(m.edge_set)
        assert m.parity == m.vertex_count % 2
        assert m.sign == math.prod(g.sign(*e) for e in m.edge_set)
        assert m.sign == math.prod(c.sign for i, c in enumerate(fund) if m.coordinates >> i & 1)
        seen = [v for cyc in m.component_cycles for v in cyc]
        assert len(seen) == len(set(seen)) == m.vertex_count
        # component cycles ordered by their smallest vertex
        assert [c[0] for c in m.component_cycles] == sorted(min(c) for c in m.component_cycles)


@given(connected_signed_graphs(max_n=8))
@settings(max_examples=60)
def test_single_cycles_match_dfs(g):
    dfs = {frozenset(v) for v, _ in simple_cycles(g)}
    cat = {m.vertices for m in enumerate_two_regular(g).all if m.p == 1}
    # a vertex set can carry several cycles, so compare with multiplicity by edge sets
    dfs_edges = sorted(sorted((min(a, b), max(a, b)) for a, b in zip(v, v[1:] + v[:1]))
                       for v, _ in simple_cycles(g))
    cat_edges = sorted(sorted(m.edge_set) for m in enumerate_two_regular(g).all if m.p == 1)
    assert dfs_edges == cat_edges
    assert dfs == cat


@given(connected_signed_graphs(max_n=7), st.data())
def test_sign_vector_switching_invariant(g, data):
    u = data.draw(st.sets(st.integers(0, g.n - 1)))
    assert cycle_sign_vector(switch(g, u)) == cycle_sign_vector(g)


def test_sign_vector_examples():
    g = complete_graph(4)
    assert cycle_sign_vector(g) == (0, 0, 0)
    theta = base_bicyclic(BaseBicyclicSpec("theta", (1, 2, 2)))
    t = spanning_tree(theta)
    neg = theta.with_signs([-1 if e == t.cotree_edges[0] else 1 for e in theta.edges])
    assert sum(cycle_sign_vector(neg)) == 1


@pytest.mark.parametrize("g", [cycle_graph(4), complete_graph(4), path_graph(3),
                               base_bicyclic(BaseBicyclicSpec("theta", (1, 2, 3)))])
def test_all_signatures_give_2_to_k_vectors(g):
    k = spanning_tree(g).k
    vectors = {cycle_sign_vector(g.with_signs(s)) for s in product((1, -1), repeat=g.m)}
    assert len(vectors) == 2 ** k


def test_cycle_space_cap():
    # K8 has cyclomatic number 21
    with pytest.raises(CapExceededError):
        enumerate_two_regular(complete_graph(8))
    assert spanning_tree(complete_graph(8)).k == MAX_CYCLOMATIC + 1
