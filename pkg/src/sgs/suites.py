"""Named verification suites: exhaustive or sampled checks of the theory on small graphs.

Each suite stops at the first counterexample and reports it in the signed
graph text format.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from . import constructions as cons
from .census import (base_bicyclic_specs, census, connected_labeled_graphs, enumerate_signatures,
                     unicyclic_labeled_graphs)
from .cycles import cycle_sign_vector, fundamental_cycles, spanning_tree, tree_from_edges
from .errors import SignedGraphError
from .graph import (SignedGraph, VertexPermutation, complete_graph, cycle_graph, empty_graph, is_bipartite, is_connected,
                    path_graph, serialize, star_graph)
from .poly import (char_coefficients, char_poly, char_poly_batch, decomposition_batch, decomposition_poly,
                   is_spectrally_symmetric, odd_part, odd_terms, sachs_coefficients)
from .symmetry import classify, find_weak_automorphism, is_sign_symmetric, is_weak_automorphism


@dataclass
class SuiteReport:
    name: str
    passed: bool
    checked: int
    elapsed: float
    counterexample: str | None = None
    message: str = ""
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "elapsed_seconds": round(self.elapsed, 3), "counterexample": self.counterexample,
                "message": self.message, "details": self.details}


class _Failure(Exception):
    def __init__(self, graph: SignedGraph, message: str):
        super().__init__(message)
        self.graph = graph
        self.message = message


def _run(name: str, body, **kwargs) -> SuiteReport:
    start = time.perf_counter()
    counter = {"checked": 0}
    details: dict = {}
    try:
        body(counter, details, **kwargs)
    except _Failure as f:
        return SuiteReport(name, False, counter["checked"], time.perf_counter() - start,
                           serialize(f.graph), f.message, details)
    return SuiteReport(name, True, counter["checked"], time.perf_counter() - start, details=details)


def _corpus(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from connected_labeled_graphs(n)


# individual suites -----------------------------------------------------------------

def _sachs(counter, details, max_n=6, seed=0):
    rng = random.Random(seed)
    for g in _corpus(max_n):
        masks = {0, (1 << g.m) - 1, rng.getrandbits(g.m) if g.m else 0}
        for mask in sorted(masks):
            h = g.with_negative_mask(mask)
            if char_coefficients(h) != sachs_coefficients(h):
                raise _Failure(h, f"char_poly {char_coefficients(h)} != Sachs {sachs_coefficients(h)}")
            counter["checked"] += 1


def _decomposition(counter, details, max_n=6, samples=200, exhaustive_n=5, seed=0):
    rng = random.Random(seed)
    for g in _corpus(max_n):
        if g.n <= exhaustive_n:
            masks = list(range(1 << g.m))
        else:
            masks = [rng.getrandbits(g.m) for _ in range(samples)]
        # the scalar routines on one signing, the batched ones on all of them
        h = g.with_negative_mask(masks[-1])
        if char_poly(h) != decomposition_poly(h):
            raise _Failure(h, f"char_poly {char_poly(h)} != decomposition {decomposition_poly(h)}")
        lhs = char_poly_batch(g, masks)
        rhs = decomposition_batch(g, masks)
        bad = np.nonzero(np.any(lhs != rhs, axis=1))[0]
        if len(bad):
            h = g.with_negative_mask(masks[int(bad[0])])
            raise _Failure(h, f"char_poly {char_poly(h)} != decomposition {decomposition_poly(h)}")
        counter["checked"] += len(masks)


def _odd_part(counter, details, max_n=5):
    for g in _corpus(max_n):
        for h in enumerate_signatures(g):
            p = char_poly(h)
            q = odd_part(h)
            if q != odd_terms(p, h.n):
                raise _Failure(h, f"odd part {q} differs from odd terms of {p}")
            if is_spectrally_symmetric(h) != q.is_zero():
                raise _Failure(h, "spectral symmetry disagrees with vanishing odd part")
            counter["checked"] += 1


def _sign_symmetry_equiv(counter, details, max_n=6):
    found_one_way = 0
    for g in _corpus(max_n):
        reps = enumerate_signatures(g)
        coeffs = char_poly_batch(g, [h.negative_mask for h in reps])
        odd_cols = coeffs[:, [i for i in range(g.n + 1) if (g.n - i) % 2]]
        spectral = ~np.any(odd_cols != 0, axis=1)
        for h, spec in zip(reps, spectral):
            weak = find_weak_automorphism(h) is not None
            sign = is_sign_symmetric(h) is not None
            if weak != sign:
                raise _Failure(h, f"odd_exchangeable={weak} but sign_symmetric={sign}")
            if weak and not spec:
                raise _Failure(h, "odd-exchangeable graph with an asymmetric spectrum")
            found_one_way += bool(spec and not sign)
            counter["checked"] += 1
    details["spectral_but_not_sign_symmetric"] = found_one_way


def _unicyclic(counter, details, max_n=7):
    for n in range(3, max_n + 1):
        for g in unicyclic_labeled_graphs(n):
            t = spanning_tree(g)
            cycle_len = len(fundamental_cycles(g, t)[0].edge_set)
            for h in enumerate_signatures(g):
                if is_spectrally_symmetric(h) != (cycle_len % 2 == 0):
                    raise _Failure(h, f"cycle length {cycle_len} but spectrally_symmetric={not cycle_len % 2}")
                counter["checked"] += 1


def _bicyclic(counter, details, max_n=9):
    graphs = 0
    for spec in base_bicyclic_specs(max_n):
        g = cons.base_bicyclic(spec)
        if is_bipartite(g):
            continue
        graphs += 1
        report = census(g)
        members = 0
        for c, h in zip(report.classes, enumerate_signatures(g)):
            v = c.verdict
            member = cons.bicyclic_family_membership(h)
            members += member
            if v.spectrally_symmetric != member:
                raise _Failure(h, f"{spec.label()}: spectrally_symmetric={v.spectrally_symmetric}, "
                                  f"family member={member}")
            if v.spectrally_symmetric != v.sign_symmetric:
                raise _Failure(h, f"{spec.label()}: spectral and sign symmetry differ")
            counter["checked"] += 1
    details["graphs"] = graphs


def counting_corpus() -> list[tuple[str, SignedGraph]]:
    """A tree, C5, the three base bicyclic shapes and K4."""
    return [
        ("star K1,3", star_graph(3)),
        ("C5", cycle_graph(5)),
        ("theta(1,2,2)", cons.base_bicyclic(cons.BaseBicyclicSpec("theta", (1, 2, 2)))),
        ("infinity(3,3)", cons.base_bicyclic(cons.BaseBicyclicSpec("infinity", (3, 3)))),
        ("bowtie(1,3,3)", cons.base_bicyclic(cons.BaseBicyclicSpec("bowtie", (1, 3, 3)))),
        ("K4", complete_graph(4)),
    ]


def _counts(counter, details, max_n=5):
    for label, g in counting_corpus():
        report = census(g)
        problems = report.check()
        if problems:
            raise _Failure(g, f"{label}: " + "; ".join(problems))
        details[label] = len(report.classes)
        counter["checked"] += 1
    for g in _corpus(max_n):
        reps = enumerate_signatures(g)
        k = len(reps).bit_length() - 1
        vectors = [cycle_sign_vector(h) for h in reps]
        if len(set(vectors)) != len(reps):
            raise _Failure(g, "two representatives share a cycle sign vector")
        strata = [0] * (k + 1)
        for vec in vectors:
            strata[sum(vec)] += 1
        if any(strata[t] != len(list(combinations(range(k), t))) for t in range(k + 1)):
            raise _Failure(g, f"strata {strata} are not binomial")
        counter["checked"] += 1


def random_block_pair(rng: random.Random, h: int) -> tuple[np.ndarray, np.ndarray]:
    def sym(zero_diag: bool):
        x = np.zeros((h, h), dtype=int)
        for i in range(h):
            for j in range(i, h):
                if i == j and zero_diag:
                    continue
                x[i, j] = x[j, i] = rng.choice((-1, 0, 1))
        return x
    return sym(True), sym(False)


def random_connected_blocks(count: int = 100, max_dim: int = 4, seed: int = 0):
    """``count`` random block pairs, redrawn until the block graph is connected."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        b, c = random_block_pair(rng, rng.randint(1, max_dim))
        if is_connected(cons.block_construction(b, c).graph):
            out.append((b, c))
    return out


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SignedGraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1),
                          (1,) * bin(mask).count("1"))


def closure_corpus() -> list[cons.Certified]:
    """Twenty spectrally symmetric graphs, each with the construction that certifies it."""
    out = []
    for size in (3, 4):
        out.append(cons.link(cycle_graph(size, negative=[0]), 0))
    out.append(cons.link(complete_graph(4), 1, 2, [1, -1]))
    out.append(cons.link(path_graph(3), 1, 3))
    for half in (path_graph(2), path_graph(3), star_graph(2), complete_graph(3)):
        out.append(cons.complete_split(half))
    rng = random.Random(7)
    for b, c in random_connected_blocks(4, 3, seed=11):
        out.append(cons.block_construction(b, c))
    for spec in (cons.BaseBicyclicSpec("infinity", (3, 3), (True, False)),
                 cons.BaseBicyclicSpec("theta", (1, 2, 2), (False, True, False)),
                 cons.BaseBicyclicSpec("bowtie", (2, 5, 5), (False, True, False)),
                 cons.BaseBicyclicSpec("theta", (2, 3, 3), (False, False, True))):
        g = cons.base_bicyclic(spec)
        out.append(cons.Certified(g, find_weak_automorphism(g), "base-bicyclic", {"spec": spec.label()}))
    out.append(named_construction("extend-infinity-33"))
    out.append(cons.construction_one([None, (path_graph(2), 0), None]))
    g = cons.base_bicyclic(cons.BaseBicyclicSpec("infinity", (3, 3), (True, False)))
    w = find_weak_automorphism(g)
    out.append(cons.attach(g, w, [cons.PairAttachment(1, w(1), path_graph(2)),
                                  cons.FixedAttachment(0, cycle_graph(4))]))
    out.append(cons.Certified(cycle_graph(6, negative=[rng.randrange(6)]), None, "bipartite", {}))
    return out


def _constructions(counter, details, seed=0):
    def need(cond, g, msg):
        if not cond:
            raise _Failure(g, msg)
        counter["checked"] += 1

    for h in range(1, 5):
        for half in all_graphs(h):
            g = cons.complete_split(half).graph
            need(is_spectrally_symmetric(g), g, "complete split with an asymmetric spectrum")
    for b, c in random_connected_blocks(100, 4, seed):
        out = cons.block_construction(b, c)
        v = classify(out.graph)
        need(v.spectrally_symmetric and v.sign_symmetric, out.graph, "block construction not sign-symmetric")
        need(is_weak_automorphism(out.graph, out.witness), out.graph, "block swap is not a weak automorphism")
    k2 = path_graph(2)
    for item in closure_corpus():
        g = item.graph
        need(is_spectrally_symmetric(g), g, f"{item.construction} output is not spectrally symmetric")
        if item.witness is not None:
            need(is_weak_automorphism(g, item.witness), g, f"{item.construction} certificate is not weak")
        need(is_spectrally_symmetric(cons.cartesian_product(g, k2)), g, "product with K2 lost symmetry")
        need(is_spectrally_symmetric(cons.corona_k1(g)), g, "corona lost symmetry")
    g = cons.construction_one([None, (path_graph(2), 0), None]).graph
    need(odd_part(g).is_zero(), g, "construction one has a nonzero odd part")
    details["construction_one_sign_symmetric"] = classify(g).sign_symmetric


SUITES = {
    "sachs": _sachs,
    "decomposition": _decomposition,
    "odd_part": _odd_part,
    "sign_symmetry_equiv": _sign_symmetry_equiv,
    "unicyclic": _unicyclic,
    "bicyclic": _bicyclic,
    "counts": _counts,
    "constructions": _constructions,
}


def verify_suite(name: str, **params) -> SuiteReport:
    try:
        body = SUITES[name]
    except KeyError:
        raise SignedGraphError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return _run(name, body, **params)


# named constructions for the command line -----------------------------------------

_FAMILIES = {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph, "star": star_graph,
             "empty": empty_graph}


def parse_graph_spec(text: str) -> SignedGraph:
    """``path:3``, ``cycle:5``, ``cycle:5:0`` (negative edge indices after the size),
    ``complete:4``, ``star:3``, ``empty:2`` or ``infinity:3-,3`` style base bicyclic shapes."""
    kind, _, rest = text.partition(":")
    if kind in cons.KINDS:
        lengths, marks = [], []
        for part in rest.split(","):
            marks.append(part.endswith("-"))
            lengths.append(int(part.rstrip("-")))
        return cons.base_bicyclic(cons.BaseBicyclicSpec(kind, tuple(lengths), tuple(marks)))
    if kind not in _FAMILIES:
        raise SignedGraphError(f"unknown graph family {kind!r}")
    size, *neg = rest.split(":")
    try:
        if kind in ("path", "cycle"):
            return _FAMILIES[kind](int(size), [int(x) for x in neg[0].split(",")] if neg else ())
        return _FAMILIES[kind](int(size))
    except ValueError:
        raise SignedGraphError(f"bad graph spec {text!r}") from None


def _matrix(text: str) -> np.ndarray:
    import json
    try:
        return np.array(json.loads(text), dtype=int)
    except (ValueError, TypeError):
        raise SignedGraphError(f"bad matrix {text!r}; expected JSON like [[0,1],[1,0]]") from None


def _signs(text: str) -> list[int]:
    return [-1 if ch == "-" else 1 for ch in text if ch in "+-"]


def _trees(text: str):
    out = []
    for part in text.split(","):
        part = part.strip().upper()
        if part in ("", "NONE", "-"):
            out.append(None)
        elif part.startswith("K1"):
            out.append((empty_graph(1), 0))
        elif part.startswith("P"):
            out.append((path_graph(int(part[1:])), 0))
        else:
            raise SignedGraphError(f"unknown tree {part!r}; use K1, P<n> or none")
    return out


def named_construction(name: str, **params: str) -> cons.Certified:
    """Build a construction from CLI-style string parameters."""
    p = dict(params)

    def take(key, default=None):
        return p.pop(key, default)

    if name == "extend-infinity-33":
        g = cons.base_bicyclic(cons.BaseBicyclicSpec("infinity", (3, 3), (True, False)))
        phi = VertexPermutation.from_cycles(5, [(1, 4), (2, 3)])
        tree = tree_from_edges(g, [(1, 2), (0, 2), (0, 3), (3, 4)])
        out = cons.extend(g, phi, 1, 3, int(take("sign", "1")), tree=tree)
        out.construction = "extend-infinity-33"
    elif name == "base-bicyclic":
        g = parse_graph_spec(f"{take('kind', 'infinity')}:{take('lengths', '3-,3')}")
        out = cons.Certified(g, None, name, {"graph": serialize(g)})
    elif name == "complete-split":
        out = cons.complete_split(parse_graph_spec(take("half", "path:3")))
    elif name == "block":
        out = cons.block_construction(_matrix(take("b", "[[0]]")), _matrix(take("c", "[[1]]")))
    elif name == "link":
        length = int(take("length", "1"))
        signs = _signs(take("signs", "+" * length))
        out = cons.link(parse_graph_spec(take("base", "cycle:3")), int(take("u", "0")), length, signs)
    elif name == "cartesian-k2":
        g = cons.cartesian_product(parse_graph_spec(take("base", "cycle:4")), path_graph(2))
        out = cons.Certified(g, None, name, {})
    elif name == "corona":
        out = cons.Certified(cons.corona_k1(parse_graph_spec(take("base", "path:2"))), None, name, {})
    elif name == "construction-one":
        out = cons.construction_one(_trees(take("trees", "K1,P2,K1")), int(take("cycle", "3")))
    else:
        raise SignedGraphError(f"unknown construction {name!r}; choose from {', '.join(CONSTRUCTIONS)}")
    if p:
        raise SignedGraphError(f"unknown parameter(s) for {name}: {', '.join(sorted(p))}")
    out.parameters = {**out.parameters, **params}
    return out


CONSTRUCTIONS = ("extend-infinity-33", "base-bicyclic", "complete-split", "block", "link",
                 "cartesian-k2", "corona", "construction-one")
