"""Automorphisms, weak automorphisms and sign-symmetry.

Two independent routes decide whether a signed graph is switching
isomorphic to its negation:

* odd-exchangeability: some automorphism of the underlying graph maps the
  positive odd 2-regular subgraphs exactly onto the negative ones;
* the switching fingerprint: some automorphism makes the fundamental-cycle
  sign vector of the relabeled graph equal to that of the negated graph.

:func:`classify` runs both and the exact spectral test, and reports any
disagreement with the expected implications instead of hiding it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .cycles import (SpanningTree, fundamental_cycles, spanning_tree, tree_from_edges,
                     two_regular_masks)
from .errors import CapExceededError, NotAutomorphismError, NotConnectedError
from .graph import SignedGraph, VertexPermutation, is_connected
from .poly import is_spectrally_symmetric

MAX_AUTOMORPHISM_N = 12


@lru_cache(maxsize=4096)
def _automorphism_images(n: int, edges) -> tuple[tuple[int, ...], ...]:
    nb = [0] * n
    deg = [0] * n
    for a, b in edges:
        nb[a] |= 1 << b
        nb[b] |= 1 << a
        deg[a] += 1
        deg[b] += 1
    # cheap vertex invariant: degree plus sorted neighbour degrees
    inv = [(deg[v], tuple(sorted(deg[w] for w in range(n) if nb[v] >> w & 1))) for v in range(n)]
    image = [-1] * n
    out = []

    def place(v: int, used: int, assigned: int):
        if v == n:
            out.append(tuple(image))
            return
        # images of v's already-placed neighbours
        want = 0
        rest = nb[v] & assigned
        while rest:
            bit = rest & -rest
            want |= 1 << image[bit.bit_length() - 1]
            rest ^= bit
        for w in range(n):
            if used >> w & 1 or inv[w] != inv[v]:
                continue
            if nb[w] & used != want:
                continue
            image[v] = w
            place(v + 1, used | 1 << w, assigned | 1 << v)
        image[v] = -1

    place(0, 0, 0)
    return tuple(out)


def _check_cap(n: int, max_n: int):
    if n > max_n:
        raise CapExceededError(f"automorphism search is capped at n <= {max_n}, got {n}")


def automorphisms(g: SignedGraph, max_n: int = MAX_AUTOMORPHISM_N) -> list[VertexPermutation]:
    """All automorphisms of the underlying graph, lexicographic by image array."""
    _check_cap(g.n, max_n)
    return [VertexPermutation(img) for img in _automorphism_images(g.n, g.edges)]


def _edge_permutation(g: SignedGraph, p: VertexPermutation) -> tuple[int, ...]:
    if p.n != g.n:
        raise NotAutomorphismError(f"permutation on {p.n} points for a graph on {g.n} vertices")
    idx = g.edge_index
    try:
        return tuple(idx[p.map_edge(e)] for e in g.edges)
    except KeyError:
        raise NotAutomorphismError(f"{p} is not an automorphism of the underlying graph") from None


def _map_mask(eperm, mask: int) -> int:
    out = 0
    while mask:
        bit = mask & -mask
        out |= 1 << eperm[bit.bit_length() - 1]
        mask ^= bit
    return out


def _parity(x: int) -> int:
    return x.bit_count() & 1


class _Structure:
    """Signature-independent data of one underlying graph, shared by all signings."""

    def __init__(self, g: SignedGraph):
        self.tree = spanning_tree(g)
        self.fund = tuple(c.mask for c in fundamental_cycles(g, self.tree))
        self.fund_odd = sum(1 << i for i, m in enumerate(self.fund) if _parity(m))
        members = two_regular_masks(g, self.tree)
        self.odd = tuple(m for _, m, v in members if v.bit_count() & 1)
        self.odd_index = {m: i for i, m in enumerate(self.odd)}
        self._auts = None
        self._eperms = None
        self._odd_perms = {}
        self.g = g.underlying()

    def automorphisms(self, max_n: int = MAX_AUTOMORPHISM_N) -> tuple[tuple[int, ...], ...]:
        # the cap is checked on every call since the cached structure is shared
        _check_cap(self.g.n, max_n)
        if self._auts is None:
            self._auts = _automorphism_images(self.g.n, self.g.edges)
        return self._auts

    @property
    def auts(self) -> tuple[tuple[int, ...], ...]:
        return self._auts if self._auts is not None else self.automorphisms()

    @property
    def eperms(self):
        if self._eperms is None:
            self._eperms = [_edge_permutation(self.g, VertexPermutation(img)) for img in self.auts]
        return self._eperms

    def odd_perm(self, i: int) -> tuple[int, ...]:
        """Index permutation induced on the odd 2-regular subgraphs by automorphism i."""
        perm = self._odd_perms.get(i)
        if perm is None:
            ep = self.eperms[i]
            perm = tuple(self.odd_index[_map_mask(ep, m)] for m in self.odd)
            self._odd_perms[i] = perm
        return perm


@lru_cache(maxsize=256)
def _structure_for(n: int, edges) -> _Structure:
    return _Structure(SignedGraph(n, edges, (1,) * len(edges)))


def _structure(g: SignedGraph) -> _Structure:
    if not is_connected(g):
        raise NotConnectedError("sign-symmetry routines need a connected graph")
    return _structure_for(g.n, g.edges)


# weak automorphisms -----------------------------------------------------------

def is_weak_automorphism(g: SignedGraph, p: VertexPermutation) -> bool:
    """Does ``p`` map the positive odd 2-regular subgraphs onto the negative ones?"""
    eperm = _edge_permutation(g, p)
    st = _structure(g)
    neg = g.negative_mask
    positive = [m for m in st.odd if not _parity(m & neg)]
    negative = {m for m in st.odd if _parity(m & neg)}
    images = {_map_mask(eperm, m) for m in positive}
    return images == negative


def spanning_cycle_criterion(g: SignedGraph, p: VertexPermutation,
                             t: SpanningTree | None = None) -> bool:
    """Fundamental-cycle test for a weak automorphism.

    With T the spanning tree and T' = p(T): the positive odd fundamental
    cycles of T must map onto the negative odd fundamental cycles of T', and
    the positive even ones onto the positive even ones of T'.
    """
    eperm = _edge_permutation(g, p)
    if t is None:
        t = spanning_tree(g)
    t_img = tree_from_edges(g, [p.map_edge(e) for e in t.tree_edges])
    base = fundamental_cycles(g, t)
    img = fundamental_cycles(g, t_img)

    def pick(cycles, parity, sign):
        return [c.mask for c in cycles if c.parity == parity and c.sign == sign]

    odd_ok = {_map_mask(eperm, m) for m in pick(base, 1, 1)} == set(pick(img, 1, -1))
    even_ok = {_map_mask(eperm, m) for m in pick(base, 0, 1)} == set(pick(img, 0, 1))
    return odd_ok and even_ok


def find_weak_automorphism(g: SignedGraph, max_n: int = MAX_AUTOMORPHISM_N) -> VertexPermutation | None:
    """Lexicographically first weak automorphism, or None."""
    st = _structure(g)
    auts = st.automorphisms(max_n)
    neg = g.negative_mask
    signs = [_parity(m & neg) for m in st.odd]
    n_neg = sum(signs)
    if 2 * n_neg != len(signs):
        # a bijection between C1+ and C1- needs them to be the same size
        return None
    for i, img in enumerate(auts):
        perm = st.odd_perm(i)
        if all(signs[perm[j]] != s for j, s in enumerate(signs) if not s):
            return VertexPermutation(img)
    return None


# sign-symmetry ----------------------------------------------------------------

def is_sign_symmetric(g: SignedGraph, max_n: int = MAX_AUTOMORPHISM_N) -> VertexPermutation | None:
    """An automorphism p with g^p switching equivalent to -g, or None.

    Switching classes on a fixed underlying graph are compared through
    the sign vector of the fundamental cycles of the canonical tree.
    """
    st = _structure(g)
    auts = st.automorphisms(max_n)
    neg = g.negative_mask
    # negating flips the sign of exactly the odd fundamental cycles
    target = 0
    for i, m in enumerate(st.fund):
        target |= _parity(m & neg) << i
    target ^= st.fund_odd
    for img, eperm in zip(auts, st.eperms):
        moved = _map_mask(eperm, neg)
        vec = 0
        for i, m in enumerate(st.fund):
            vec |= _parity(m & moved) << i
        if vec == target:
            return VertexPermutation(img)
    return None


# verdicts ---------------------------------------------------------------------

@dataclass
class SymmetryVerdict:
    spectrally_symmetric: bool
    sign_symmetric: bool | None
    odd_exchangeable: bool | None
    witness: VertexPermutation | None
    automorphism_count: int | None
    switching_witness: VertexPermutation | None = None
    findings: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "spectrally_symmetric": self.spectrally_symmetric,
            "sign_symmetric": self.sign_symmetric,
            "odd_exchangeable": self.odd_exchangeable,
            "witness": list(self.witness.image) if self.witness else None,
            "switching_witness": list(self.switching_witness.image) if self.switching_witness else None,
            "automorphism_count": self.automorphism_count,
            "findings": list(self.findings),
        }


def classify(g: SignedGraph, allow_undecided: bool = False,
             max_n: int = MAX_AUTOMORPHISM_N) -> SymmetryVerdict:
    """Exact spectral test, weak-automorphism search and switching search, cross-checked.

    With ``allow_undecided`` a graph with more than ``max_n`` vertices gets ``None``
    for the two automorphism-based fields instead of raising.
    """
    spectral = is_spectrally_symmetric(g)
    try:
        st = _structure(g)
        auts = st.automorphisms(max_n)
    except CapExceededError:
        if not allow_undecided:
            raise
        return SymmetryVerdict(spectral, None, None, None, None)
    weak = find_weak_automorphism(g, max_n)
    switching = is_sign_symmetric(g, max_n)
    verdict = SymmetryVerdict(spectral, switching is not None, weak is not None, weak,
                              len(auts), switching)
    if verdict.sign_symmetric != verdict.odd_exchangeable:
        verdict.findings.append(
            f"odd_exchangeable={verdict.odd_exchangeable} but sign_symmetric={verdict.sign_symmetric}")
    if verdict.sign_symmetric and not spectral:
        verdict.findings.append("sign-symmetric graph with an asymmetric spectrum")
    if verdict.odd_exchangeable and not spectral:
        verdict.findings.append("odd-exchangeable graph with an asymmetric spectrum")
    return verdict
