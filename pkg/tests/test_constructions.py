from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sgs.constructions import (BaseBicyclicSpec, FixedAttachment, PairAttachment, attach, base_bicyclic,
                               bicyclic_family_membership, block_construction, cartesian_product,
                               complete_split, construction_one, corona_k1, extend, link,
                               recognize_base_bicyclic)
from sgs.cycles import spanning_tree, tree_from_edges
from sgs.errors import SignedGraphError
from sgs.graph import (SignedGraph, VertexPermutation, cycle_graph, empty_graph, is_connected, path_graph,
                       star_graph)
from sgs.poly import IntPolynomial, char_poly, is_spectrally_symmetric, odd_part
from sgs.spectral import eigenvalues
from sgs.symmetry import classify, is_weak_automorphism

PHI = VertexPermutation.from_cycles(5, [(1, 4), (2, 3)])


def inf33(neg=(True, False)):
    return base_bicyclic(BaseBicyclicSpec("infinity", (3, 3), neg))


def test_base_bicyclic_sizes():
    g = inf33()
    assert (g.n, g.m, g.signs.count(-1)) == (5, 6, 1)
    assert g.edges == ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4))
    theta = base_bicyclic(BaseBicyclicSpec("theta", (1, 2, 2)))
    assert (theta.n, theta.m) == (4, 5)
    bowtie = base_bicyclic(BaseBicyclicSpec("bowtie", (1, 3, 3)))
    assert (bowtie.n, bowtie.m) == (6, 7)


@pytest.mark.parametrize("kind,lengths", [("theta", (1, 1, 2)), ("theta", (0, 2, 2)), ("infinity", (2, 3)),
                                          ("bowtie", (0, 3, 3)), ("bowtie", (1, 3)), ("square", (3, 3))])
def test_base_bicyclic_rejects(kind, lengths):
    with pytest.raises(SignedGraphError):
        base_bicyclic(BaseBicyclicSpec(kind, lengths))


@pytest.mark.parametrize("spec", [BaseBicyclicSpec("theta", (2, 3, 4), (True, False, True)),
                                  BaseBicyclicSpec("infinity", (3, 5), (False, True)),
                                  BaseBicyclicSpec("bowtie", (2, 3, 4), (True, True, False))])
def test_recognition_round_trip(spec):
    kind, lengths, signs = recognize_base_bicyclic(base_bicyclic(spec))
    assert kind == spec.kind
    assert sorted(zip(lengths, signs)) == sorted((l, -1 if neg else 1)
                                                 for l, neg in zip(spec.lengths, spec.neg_marks))


def test_negative_edge_placement_does_not_matter():
    # any edge of the marked part gives the same switching class
    g = inf33()
    other = g.with_signs([-1 if e == (1, 2) else 1 for e in g.edges])
    assert char_poly(other) == char_poly(g)
    assert recognize_base_bicyclic(other) == recognize_base_bicyclic(g)


def test_family_membership_examples():
    assert bicyclic_family_membership(inf33())
    assert not bicyclic_family_membership(inf33((False, False)))
    theta = base_bicyclic(BaseBicyclicSpec("theta", (1, 2, 2), (False, True, False)))
    assert bicyclic_family_membership(theta)
    with pytest.raises(SignedGraphError):
        bicyclic_family_membership(cycle_graph(5))


def test_complete_split_examples():
    k2 = complete_split(empty_graph(1)).graph
    assert k2 == path_graph(2)
    k4 = complete_split(path_graph(2)).graph
    assert k4.m == 6 and k4.signs.count(-1) == 1
    k6 = complete_split(path_graph(3)).graph
    assert k6.m == 15 and k6.signs.count(-1) == 3
    assert is_spectrally_symmetric(k6)


def test_block_examples():
    z = np.zeros((1, 1), dtype=int)
    assert block_construction(z, z).graph == empty_graph(2)
    b = np.array([[0, 1], [1, 0]])
    g = block_construction(b, np.zeros((2, 2), dtype=int)).graph
    assert g == SignedGraph.from_edges(4, [(0, 1, 1), (2, 3, -1)])
    tri = np.ones((3, 3), dtype=int) - np.eye(3, dtype=int)
    out = block_construction(tri, tri)
    v = classify(out.graph)
    assert v.sign_symmetric and v.spectrally_symmetric


def test_block_diagonal_of_c_joins_the_halves():
    out = block_construction(np.zeros((2, 2), dtype=int), np.eye(2, dtype=int))
    assert out.graph.edges == ((0, 2), (1, 3))


@pytest.mark.parametrize("b,c", [
    (np.zeros((2, 2)), np.zeros((3, 3))),
    (np.eye(2), np.zeros((2, 2))),
    (np.array([[0, 2], [2, 0]]), np.zeros((2, 2))),
    (np.array([[0, 1], [0, 0]]), np.zeros((2, 2))),
])
def test_block_rejects(b, c):
    with pytest.raises(SignedGraphError):
        block_construction(b, c)


def test_cartesian_examples():
    g = cycle_graph(5, negative=[1])
    assert cartesian_product(empty_graph(1), g) == g
    sq = cartesian_product(path_graph(2), path_graph(2))
    assert sq.edges == ((0, 1), (0, 2), (1, 3), (2, 3)) and set(sq.signs) == {1}
    sym = inf33()
    assert is_spectrally_symmetric(cartesian_product(sym, path_graph(2)))


def test_corona_examples():
    assert corona_k1(empty_graph(1)) == path_graph(2)
    net = corona_k1(cycle_graph(3))
    assert net.n == 6 and not is_spectrally_symmetric(net)
    assert not np.allclose(eigenvalues(net).values, [-v for v in reversed(eigenvalues(net).values)])
    assert is_spectrally_symmetric(corona_k1(inf33()))


def test_link_examples():
    out = link(empty_graph(1), 0, 1, [-1])
    assert out.graph == SignedGraph.from_edges(2, [(0, 1, -1)])
    out = link(cycle_graph(3), 1)
    assert out.graph.n == 6 and classify(out.graph).odd_exchangeable
    with pytest.raises(SignedGraphError):
        link(cycle_graph(3), 3)
    with pytest.raises(SignedGraphError):
        link(cycle_graph(3), 0, 2, [1])


@given(st.integers(3, 6), st.integers(1, 4), st.data())
@settings(max_examples=30, deadline=None)
def test_link_always_certified(size, length, data):
    neg = data.draw(st.sets(st.integers(0, size - 1)))
    g = cycle_graph(size, negative=sorted(neg))
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=length, max_size=length))
    out = link(g, data.draw(st.integers(0, size - 1)), length, signs)
    assert is_spectrally_symmetric(out.graph)
    assert is_weak_automorphism(out.graph, out.witness)


def test_attach_examples():
    g = inf33()
    assert attach(g, PHI, []).graph == g
    out = attach(g, PHI, [PairAttachment(1, 4, path_graph(2), 0)])
    assert out.graph.n == 7
    assert is_weak_automorphism(out.graph, out.witness) and classify(out.graph).odd_exchangeable
    out = attach(g, PHI, [FixedAttachment(0, cycle_graph(4, negative=[0]), 2)])
    assert is_weak_automorphism(out.graph, out.witness) and classify(out.graph).odd_exchangeable
    assert is_spectrally_symmetric(out.graph)


def test_attach_odd_exchangeable_piece_and_chaining():
    g = inf33()
    piece = inf33()
    out = attach(g, PHI, [FixedAttachment(0, piece, 0), PairAttachment(2, 3, cycle_graph(3), 1)])
    assert is_weak_automorphism(out.graph, out.witness)
    assert is_spectrally_symmetric(out.graph)
    # the glued copies are exchanged by the new witness, so they can be used in a later step
    step = out.witness
    u = out.graph.n - 1
    again = attach(out.graph, step, [PairAttachment(u, step(u), path_graph(2))])
    assert is_weak_automorphism(again.graph, again.witness)


def test_attach_rejects():
    g = inf33()
    with pytest.raises(SignedGraphError):
        attach(g, VertexPermutation.identity(5), [])
    with pytest.raises(SignedGraphError):
        attach(g, PHI, [PairAttachment(1, 2, path_graph(2))])
    with pytest.raises(SignedGraphError):
        attach(g, PHI, [FixedAttachment(1, path_graph(2))])
    with pytest.raises(SignedGraphError, match="neither bipartite"):
        attach(g, PHI, [FixedAttachment(0, cycle_graph(3))])
    # the piece is odd-exchangeable, but no weak automorphism of it fixes vertex 1
    with pytest.raises(SignedGraphError):
        attach(g, PHI, [FixedAttachment(0, inf33(), 1)])


def path_tree_extension():
    g = inf33()
    tree = tree_from_edges(g, [(1, 2), (0, 2), (0, 3), (3, 4)])
    return extend(g, PHI, 1, 3, tree=tree)


def test_extend_example():
    out = path_tree_extension()
    h = out.graph
    assert h.m == 8
    assert h.sign(1, 3) == h.sign(2, 4) == 1
    assert is_weak_automorphism(h, PHI) and is_spectrally_symmetric(h)
    assert char_poly(h) == IntPolynomial([0, 8, 0, -8, 0, 1])


def test_extend_rejects():
    g = inf33()
    tree = tree_from_edges(g, [(1, 2), (0, 2), (0, 3), (3, 4)])
    with pytest.raises(SignedGraphError):
        extend(g, PHI, 1, 4, tree=tree)          # pair fixed by phi
    with pytest.raises(SignedGraphError):
        extend(g, PHI, 1, 2, tree=tree)          # already adjacent
    with pytest.raises(SignedGraphError):
        extend(g, PHI, 1, 3, 0, tree=tree)       # bad sign choice
    bad_tree = tree_from_edges(g, [(0, 1), (1, 2), (0, 3), (0, 4)])
    with pytest.raises(SignedGraphError, match="spanning tree"):
        extend(g, PHI, 1, 3, tree=bad_tree)


def test_extend_sign_rule_with_odd_cycles():
    # path 0-1-2-3-4 with the reversal; adding 0-2 and 2-4 closes two triangles
    g = path_graph(5)
    rev = VertexPermutation((4, 3, 2, 1, 0))
    out = extend(g, rev, 0, 2)
    h = out.graph
    assert h.sign(0, 2) * h.sign(2, 4) == -1
    assert is_weak_automorphism(h, rev) and is_spectrally_symmetric(h)


def test_repeated_extension_from_a_tree():
    g = path_graph(6)
    rev = VertexPermutation(tuple(reversed(range(6))))
    tree = spanning_tree(g)
    steps = [(0, 2), (1, 5), (0, 3)]
    for vi, vj in steps:
        out = extend(g, rev, vi, vj, tree=tree_from_edges(g, tree.tree_edges))
        g = out.graph
        v = classify(g)
        assert v.odd_exchangeable and v.spectrally_symmetric


def test_construction_one_variants():
    k1 = (empty_graph(1), 0)
    p2 = (path_graph(2), 0)
    g = construction_one([k1, k1, k1]).graph
    assert g.n == 12 and odd_part(g).is_zero()
    g = construction_one([k1, p2, k1]).graph
    assert g.n == 14 and odd_part(g).is_zero()
    assert odd_part(construction_one(cycle_length=5).graph).is_zero()
    assert odd_part(construction_one([(star_graph(3), 0), p2, None], cycle_length=5).graph).is_zero()
    with pytest.raises(SignedGraphError):
        construction_one(cycle_length=4)
    with pytest.raises(SignedGraphError):
        construction_one([k1] * 4)
    with pytest.raises(SignedGraphError):
        construction_one([(cycle_graph(3), 0)])


def test_construction_one_unequal_trees_not_sign_symmetric():
    g = construction_one([None, (path_graph(2), 0), None]).graph
    v = classify(g)
    assert v.spectrally_symmetric and not v.sign_symmetric and not v.odd_exchangeable


@given(st.integers(1, 4), st.data())
@settings(max_examples=40, deadline=None)
def test_generators_are_exactly_symmetric(h, data):
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    b = np.zeros((h, h), dtype=int)
    c = np.zeros((h, h), dtype=int)
    for i in range(h):
        for j in range(i, h):
            c[i, j] = c[j, i] = rng.choice((-1, 0, 1))
            if i != j:
                b[i, j] = b[j, i] = rng.choice((-1, 0, 1))
    out = block_construction(b, c)
    assert is_spectrally_symmetric(out.graph)
    if is_connected(out.graph):
        assert is_weak_automorphism(out.graph, out.witness)
