"""Switching-class census of one underlying graph, plus small graph corpora."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

from .constructions import KINDS, BaseBicyclicSpec
from .cycles import cycle_sign_vector, spanning_tree
from .errors import CapExceededError, NotConnectedError
from .graph import SignedGraph, is_connected, serialize
from .symmetry import MAX_AUTOMORPHISM_N, SymmetryVerdict, classify

MAX_CENSUS_K = 16


def enumerate_signatures(g: SignedGraph, max_k: int = MAX_CENSUS_K) -> list[SignedGraph]:
    """One representative per switching class: tree edges positive, cotree subset negative.

    Representative ``i`` makes cotree edge ``j`` negative iff bit ``j`` of ``i`` is set.
    """
    if not is_connected(g):
        raise NotConnectedError("census needs a connected graph")
    t = spanning_tree(g)
    if t.k > max_k:
        raise CapExceededError(f"cyclomatic number {t.k} exceeds the census cap {max_k}")
    idx = [g.edge_index[e] for e in t.cotree_edges]
    base = g.underlying()
    out = []
    for subset in range(1 << t.k):
        neg = 0
        for j, i in enumerate(idx):
            if subset >> j & 1:
                neg |= 1 << i
        out.append(base.with_negative_mask(neg))
    return out


@dataclass
class CensusClass:
    subset: int
    negative_cotree_edges: tuple
    t: int
    verdict: SymmetryVerdict

    def to_json(self) -> dict:
        return {"subset": self.subset, "negative_cotree_edges": [list(e) for e in self.negative_cotree_edges],
                "t": self.t, "verdict": self.verdict.to_json()}


@dataclass
class CensusReport:
    underlying: str
    n: int
    m: int
    k: int
    classes: list[CensusClass]
    summary: dict = field(default_factory=dict)

    def strata(self) -> dict[int, int]:
        return dict(sorted(Counter(c.t for c in self.classes).items()))

    def check(self) -> list[str]:
        """Violated report invariants (empty when all hold)."""
        problems = []
        if len(self.classes) != 2 ** self.k:
            problems.append(f"{len(self.classes)} classes, expected 2^{self.k}")
        for t, count in self.strata().items():
            if count != comb(self.k, t):
                problems.append(f"{count} classes with t={t}, expected C({self.k},{t})")
        return problems

    def to_json(self) -> dict:
        return {"underlying": self.underlying, "n": self.n, "m": self.m, "k": self.k,
                "strata": {str(t): c for t, c in self.strata().items()},
                "summary": self.summary, "classes": [c.to_json() for c in self.classes]}


def _summary_key(v: SymmetryVerdict) -> str:
    sign = "undecided" if v.sign_symmetric is None else str(v.sign_symmetric).lower()
    return f"spectral={str(v.spectrally_symmetric).lower()},sign={sign}"


def _classify_chunk(graphs: list[SignedGraph], max_aut_n: int = MAX_AUTOMORPHISM_N) -> list[SymmetryVerdict]:
    return [classify(h, allow_undecided=True, max_n=max_aut_n) for h in graphs]


def census(g: SignedGraph, max_k: int = MAX_CENSUS_K, workers: int = 1,
           max_aut_n: int = MAX_AUTOMORPHISM_N) -> CensusReport:
    """Classify every switching class of the underlying graph of ``g``.

    Results are merged in subset order, so the report does not depend on ``workers``.
    Classes of graphs with more than ``max_aut_n`` vertices get undecided symmetry fields.
    """
    reps = enumerate_signatures(g, max_k)
    t = spanning_tree(g)
    if workers > 1 and len(reps) > 1:
        size = -(-len(reps) // (4 * workers))
        chunks = [reps[i:i + size] for i in range(0, len(reps), size)]
        with ProcessPoolExecutor(workers) as pool:
            verdicts = [v for part in pool.map(_classify_chunk, chunks, [max_aut_n] * len(chunks)) for v in part]
    else:
        verdicts = _classify_chunk(reps, max_aut_n)
    classes = []
    for subset, (h, v) in enumerate(zip(reps, verdicts)):
        neg = tuple(e for j, e in enumerate(t.cotree_edges) if subset >> j & 1)
        classes.append(CensusClass(subset, neg, sum(cycle_sign_vector(h, t)), v))
    summary = dict(sorted(Counter(_summary_key(c.verdict) for c in classes).items()))
    return CensusReport(serialize(g.underlying()), g.n, g.m, t.k, classes, summary)


# corpora ---------------------------------------------------------------------------

def _connected_mask(n: int, nb: list[int]) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        rest = frontier
        while rest:
            bit = rest & -rest
            grow |= nb[bit.bit_length() - 1]
            rest ^= bit
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _from_edge_choice(n: int, chosen) -> SignedGraph | None:
    nb = [0] * n
    for a, b in chosen:
        nb[a] |= 1 << b
        nb[b] |= 1 << a
    if n > 1 and not _connected_mask(n, nb):
        return None
    edges = tuple(sorted(chosen))
    return SignedGraph(n, edges, (1,) * len(edges))


def connected_labeled_graphs(n: int, m: int | None = None) -> Iterator[SignedGraph]:
    """Every connected all-positive graph on vertex set 0..n-1 (optionally with m edges)."""
    pairs = list(combinations(range(n), 2))
    if n == 1:
        yield SignedGraph(1, (), ())
        return
    sizes = [m] if m is not None else range(n - 1, len(pairs) + 1)
    for size in sizes:
        for chosen in combinations(pairs, size):
            g = _from_edge_choice(n, chosen)
            if g is not None:
                yield g


def unicyclic_labeled_graphs(n: int) -> Iterator[SignedGraph]:
    return connected_labeled_graphs(n, n) if n >= 3 else iter(())


def base_bicyclic_specs(max_n: int) -> Iterator[BaseBicyclicSpec]:
    """Every base bicyclic shape on at most max_n vertices, lengths in sorted order, all positive."""
    for kind in KINDS:
        if kind == "theta":
            # n = l1 + l2 + l3 - 1
            for l1 in range(1, max_n + 1):
                for l2 in range(max(l1, 2), max_n + 1):
                    for l3 in range(l2, max_n + 2 - l1 - l2):
                        yield BaseBicyclicSpec(kind, (l1, l2, l3))
        elif kind == "infinity":
            # n = l1 + l2 - 1
            for l1 in range(3, max_n + 1):
                for l2 in range(l1, max_n + 2 - l1):
                    yield BaseBicyclicSpec(kind, (l1, l2))
        else:
            # n = l + l1 + l2 - 1
            for l in range(1, max_n + 1):
                for l1 in range(3, max_n + 1):
                    for l2 in range(l1, max_n + 2 - l - l1):
                        yield BaseBicyclicSpec(kind, (l, l1, l2))
