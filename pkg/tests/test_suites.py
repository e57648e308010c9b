from __future__ import annotations

import pytest

from sgs.errors import SignedGraphError
from sgs.graph import cycle_graph, parse
from sgs.suites import (SUITES, _Failure, _run, closure_corpus, named_construction, parse_graph_spec,
                        random_connected_blocks, verify_suite)
from sgs.poly import is_spectrally_symmetric


@pytest.mark.parametrize("name,params", [
    ("sachs", {"max_n": 5}), ("decomposition", {"max_n": 5}), ("odd_part", {"max_n": 4}),
    ("sign_symmetry_equiv", {"max_n": 5}), ("unicyclic", {"max_n": 6}), ("bicyclic", {"max_n": 7}),
    ("counts", {"max_n": 4}), ("constructions", {}),
])
def test_suites_pass_at_small_scale(name, params):
    report = verify_suite(name, **params)
    assert report.passed, report.to_json()
    assert report.checked > 0 and report.counterexample is None


def test_every_suite_is_covered():
    assert set(SUITES) == {"sachs", "decomposition", "odd_part", "sign_symmetry_equiv", "unicyclic",
                           "bicyclic", "counts", "constructions"}


def test_unknown_suite():
    with pytest.raises(SignedGraphError):
        verify_suite("nope")


def test_failure_reports_counterexample():
    def body(counter, details):
        counter["checked"] += 1
        raise _Failure(cycle_graph(3), "planted")

    report = _run("planted", body)
    assert not report.passed and report.checked == 1
    assert parse(report.counterexample) == cycle_graph(3)
    assert report.to_json()["message"] == "planted"


def test_closure_corpus():
    corpus = closure_corpus()
    assert len(corpus) == 20
    assert all(is_spectrally_symmetric(c.graph) for c in corpus)


def test_random_blocks_are_reproducible_and_connected():
    assert [(b.tolist(), c.tolist()) for b, c in random_connected_blocks(5, seed=3)] == \
           [(b.tolist(), c.tolist()) for b, c in random_connected_blocks(5, seed=3)]


@pytest.mark.parametrize("text,n,m", [("path:3", 3, 2), ("cycle:5:0,2", 5, 5), ("complete:4", 4, 6),
                                      ("star:3", 4, 3), ("empty:2", 2, 0), ("infinity:3-,3", 5, 6),
                                      ("theta:1,2-,2", 4, 5), ("bowtie:1,3,3", 6, 7)])
def test_graph_specs(text, n, m):
    g = parse_graph_spec(text)
    assert (g.n, g.m) == (n, m)


@pytest.mark.parametrize("text", ["blob:3", "path:x", "theta:1,1,1"])
def test_bad_graph_specs(text):
    with pytest.raises(SignedGraphError):
        parse_graph_spec(text)


def test_named_constructions():
    assert named_construction("extend-infinity-33").graph.m == 8
    assert named_construction("construction-one").graph.n == 14
    assert named_construction("link", base="cycle:3", length="2", signs="+-").graph.n == 7
    assert named_construction("block", b="[[0,1],[1,0]]", c="[[1,0],[0,0]]").graph.n == 4
    assert named_construction("complete-split", half="path:3").graph.m == 15
    assert named_construction("cartesian-k2", base="cycle:4").graph.n == 8
    assert named_construction("corona", base="path:2").graph.n == 4
    assert named_construction("base-bicyclic", kind="theta", lengths="1,2-,2").graph.m == 5
    with pytest.raises(SignedGraphError):
        named_construction("missing")
    with pytest.raises(SignedGraphError):
        named_construction("link", colour="red")
