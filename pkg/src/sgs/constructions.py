"""Generators of spectrally symmetric signed graphs.

Every generator returns a :class:`Certified` graph: the graph itself plus,
where the construction provides one, a vertex permutation that is a weak
automorphism of the result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cycles import SpanningTree, fundamental_cycles, spanning_tree, tree_from_edges
from .errors import SignedGraphError
from .graph import SignedGraph, VertexPermutation, is_bipartite, is_connected, negate
from .symmetry import automorphisms, is_weak_automorphism


@dataclass
class Certified:
    graph: SignedGraph
    witness: VertexPermutation | None
    construction: str
    parameters: dict = field(default_factory=dict)

    def certificate(self) -> dict:
        return {
            "construction": self.construction,
            "parameters": self.parameters,
            "witness_permutation": list(self.witness.image) if self.witness else None,
        }


# base bicyclic graphs -----------------------------------------------------------

KINDS = ("theta", "infinity", "bowtie")


@dataclass(frozen=True)
class BaseBicyclicSpec:
    """theta: (l1, l2, l3) path lengths; infinity: (l1, l2) cycle lengths;
    bowtie: (l, l1, l2) = connecting path length and the two cycle lengths.

    ``neg_marks[i]`` puts one negative edge on part i.
    """

    kind: str
    lengths: tuple[int, ...]
    neg_marks: tuple[bool, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SignedGraphError(f"unknown base bicyclic kind {self.kind!r}")
        parts = 2 if self.kind == "infinity" else 3
        if len(self.lengths) != parts:
            raise SignedGraphError(f"{self.kind} takes {parts} lengths, got {len(self.lengths)}")
        marks = tuple(bool(x) for x in self.neg_marks) or (False,) * parts
        if len(marks) != parts:
            raise SignedGraphError(f"{self.kind} takes {parts} sign marks, got {len(marks)}")
        object.__setattr__(self, "neg_marks", marks)
        ls = self.lengths
        if self.kind == "theta":
            if min(ls) < 1:
                raise SignedGraphError("theta path lengths must be >= 1")
            if sum(1 for x in ls if x == 1) > 1:
                raise SignedGraphError("theta with two paths of length 1 has a parallel edge")
        elif self.kind == "infinity":
            if min(ls) < 3:
                raise SignedGraphError("cycle lengths must be >= 3")
        else:
            if ls[0] < 1:
                raise SignedGraphError("connecting path length must be >= 1")
            if min(ls[1:]) < 3:
                raise SignedGraphError("cycle lengths must be >= 3")

    def label(self) -> str:
        parts = ",".join(f"{l}{'-' if neg else ''}" for l, neg in zip(self.lengths, self.neg_marks))
        return f"{self.kind}({parts})"


def base_bicyclic(spec: BaseBicyclicSpec) -> SignedGraph:
    """Vertex 0 is u; then each path or cycle contributes its inner vertices in order."""
    triples = []
    nxt = 1

    def add_walk(start: int, end: int | None, length: int, negative: bool):
        nonlocal nxt
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        walk = [start] + inner + [start if end is None else end]
        for i, (a, b) in enumerate(zip(walk, walk[1:])):
            triples.append((a, b, -1 if negative and i == 0 else 1))

    ls, marks = spec.lengths, spec.neg_marks
    if spec.kind == "theta":
        nxt = 2
        for l, neg in zip(ls, marks):
            add_walk(0, 1, l, neg)
    elif spec.kind == "infinity":
        for l, neg in zip(ls, marks):
            add_walk(0, None, l, neg)
    else:
        v = ls[0]              # path interior is 1..l-1, so v comes right after it
        add_walk(0, v, ls[0], marks[0])
        nxt = v + 1
        add_walk(0, None, ls[1], marks[1])
        add_walk(v, None, ls[2], marks[2])
    return SignedGraph.from_edges(nxt, triples)


def _walk(g: SignedGraph, start: int, first: int, stop) -> tuple[list[int], int]:
    """Follow degree-2 vertices from ``start`` through ``first`` until ``stop(v)``."""
    path = [start, first]
    sign = g.sign(start, first)
    while not stop(path[-1]):
        cur, prev = path[-1], path[-2]
        a, b = g.neighbors[cur]
        nxt = b if a == prev else a
        sign *= g.sign(cur, nxt)
        path.append(nxt)
    return path, sign


def recognize_base_bicyclic(g: SignedGraph) -> tuple[str, tuple[int, ...], tuple[int, ...]]:
    """(kind, lengths, part signs) of a base bicyclic graph, in the spec order of parts."""
    if not is_connected(g) or g.m != g.n + 1 or any(g.degree(v) < 2 for v in range(g.n)):
        raise SignedGraphError("not a base bicyclic graph")
    high = [v for v in range(g.n) if g.degree(v) > 2]
    degs = sorted(g.degree(v) for v in high)
    if degs == [4]:
        u = high[0]
        cycles = {}
        for w in g.neighbors[u]:
            path, sign = _walk(g, u, w, lambda x: x == u)
            key = frozenset(path)
            cycles[key] = (len(path) - 1, sign)
        if len(cycles) != 2:
            raise SignedGraphError("not a base bicyclic graph")
        (l1, s1), (l2, s2) = cycles.values()
        return "infinity", (l1, l2), (s1, s2)
    if degs == [3, 3]:
        u, v = high
        walks = [_walk(g, u, w, lambda x: x in (u, v)) for w in g.neighbors[u]]
        if all(p[-1] == v for p, _ in walks):
            return "theta", tuple(len(p) - 1 for p, _ in walks), tuple(s for _, s in walks)
        loop = [(p, s) for p, s in walks if p[-1] == u]
        bridge = [(p, s) for p, s in walks if p[-1] == v]
        if len(loop) != 2 or len(bridge) != 1:
            raise SignedGraphError("not a base bicyclic graph")
        w_loop = [_walk(g, v, w, lambda x: x in (u, v)) for w in g.neighbors[v]]
        v_cycle = [(p, s) for p, s in w_loop if p[-1] == v][0]
        return ("bowtie", (len(bridge[0][0]) - 1, len(loop[0][0]) - 1, len(v_cycle[0]) - 1),
                (bridge[0][1], loop[0][1], v_cycle[1]))
    raise SignedGraphError("not a base bicyclic graph")


def bicyclic_family_membership(g: SignedGraph) -> bool:
    """Is ``g`` switching isomorphic to a member of the symmetric bicyclic family?

    theta: two equal paths forming a negative cycle, the third path of the
    other parity; infinity and bowtie: two equal odd cycles of opposite sign.
    """
    kind, ls, signs = recognize_base_bicyclic(g)
    if kind == "theta":
        for a, b, c in ((0, 1, 2), (0, 2, 1), (1, 2, 0)):
            if ls[a] == ls[b] and (ls[a] - ls[c]) % 2 and signs[a] * signs[b] < 0:
                return True
        return False
    c1, c2 = (ls[0], ls[1]) if kind == "infinity" else (ls[1], ls[2])
    s1, s2 = (signs[0], signs[1]) if kind == "infinity" else (signs[1], signs[2])
    return c1 == c2 and c1 % 2 == 1 and s1 * s2 < 0


# matrix constructions ----------------------------------------------------------

def complete_split(g_half: SignedGraph) -> Certified:
    """Signed K_{2h}: g_half on 0..h-1 and its complement on h..2h-1 carry the negative edges."""
    h = g_half.n
    triples = []
    for i in range(h):
        for j in range(i + 1, h):
            inside = g_half.has_edge(i, j)
            triples.append((i, j, -1 if inside else 1))
            triples.append((h + i, h + j, 1 if inside else -1))
        for j in range(h):
            triples.append((i, h + j, 1))
    swap = VertexPermutation(tuple(list(range(h, 2 * h)) + list(range(h))))
    return Certified(SignedGraph.from_edges(2 * h, triples), swap, "complete-split",
                     {"half_edges": [list(e) for e in g_half.edges], "half_n": h})


def _check_block(x, name) -> np.ndarray:
    x = np.asarray(x, dtype=int)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise SignedGraphError(f"{name} must be a square matrix")
    if not np.array_equal(x, x.T):
        raise SignedGraphError(f"{name} must be symmetric")
    if not np.all(np.isin(x, (-1, 0, 1))):
        raise SignedGraphError(f"{name} has an entry outside {{0, 1, -1}}")
    return x


def block_construction(b, c) -> Certified:
    """Signed graph with adjacency [[B, C], [C, -B]].

    B needs a zero diagonal; the diagonal of C joins vertex i to h+i and may be nonzero.
    """
    b = _check_block(b, "b")
    c = _check_block(c, "c")
    if b.shape != c.shape:
        raise SignedGraphError(f"dimension mismatch: b is {b.shape}, c is {c.shape}")
    if np.any(np.diag(b) != 0):
        raise SignedGraphError("b must have a zero diagonal")
    h = b.shape[0]
    a = np.block([[b, c], [c, -b]])
    swap = VertexPermutation(tuple(list(range(h, 2 * h)) + list(range(h))))
    return Certified(SignedGraph.from_matrix(a), swap, "block",
                     {"b": b.tolist(), "c": c.tolist()})


def cartesian_product(a: SignedGraph, b: SignedGraph) -> SignedGraph:
    """(u1, u2) -> u1 * b.n + u2; each edge keeps the sign of the factor edge it projects to."""
    triples = []
    for u1 in range(a.n):
        for (x, y), s in zip(b.edges, b.signs):
            triples.append((u1 * b.n + x, u1 * b.n + y, s))
    for u2 in range(b.n):
        for (x, y), s in zip(a.edges, a.signs):
            triples.append((x * b.n + u2, y * b.n + u2, s))
    return SignedGraph.from_edges(a.n * b.n, triples)


def corona_k1(g: SignedGraph) -> SignedGraph:
    """Pendant vertex n+i hung on every vertex i by a positive edge."""
    return SignedGraph.from_edges(2 * g.n, list(zip(*zip(*g.edges), g.signs))
                                  + [(i, g.n + i, 1) for i in range(g.n)])


# weak-automorphism constructions -----------------------------------------------

def link(g: SignedGraph, u: int, path_length: int = 1, path_signs: Sequence[int] | None = None) -> Certified:
    """g and -g joined by a path between the two copies of vertex u.

    Layout: g on 0..n-1, -g on n..2n-1, inner path vertices from 2n on.
    """
    n = g.n
    if not 0 <= u < n:
        raise SignedGraphError(f"vertex {u} not in graph on {n} vertices")
    if path_length < 1:
        raise SignedGraphError("path length must be >= 1")
    if path_signs is None:
        path_signs = [1] * path_length
    if len(path_signs) != path_length:
        raise SignedGraphError(f"{len(path_signs)} path signs for a path of length {path_length}")
    neg = negate(g)
    triples = [(a, b, s) for (a, b), s in zip(g.edges, g.signs)]
    triples += [(a + n, b + n, s) for (a, b), s in zip(neg.edges, neg.signs)]
    inner = list(range(2 * n, 2 * n + path_length - 1))
    walk = [u] + inner + [n + u]
    triples += [(a, b, int(s)) for (a, b), s in zip(zip(walk, walk[1:]), path_signs)]
    image = list(range(n, 2 * n)) + list(range(n)) + inner[::-1]
    return Certified(SignedGraph.from_edges(2 * n + len(inner), triples), VertexPermutation(tuple(image)),
                     "link", {"u": u, "path_length": path_length, "path_signs": list(path_signs)})


@dataclass(frozen=True)
class PairAttachment:
    """Glue ``graph`` at ``root`` onto u, and a negated copy onto u_prime."""
    u: int
    u_prime: int
    graph: SignedGraph
    root: int = 0


@dataclass(frozen=True)
class FixedAttachment:
    """Glue ``graph`` at ``root`` onto a vertex v fixed by the witness.

    ``graph`` must be bipartite (any root) or odd-exchangeable through a weak
    automorphism fixing ``root``; pass it as ``witness`` or let one be searched.
    """
    v: int
    graph: SignedGraph
    root: int = 0
    witness: VertexPermutation | None = None


def _glue(triples, h: SignedGraph, root: int, at: int, offset: int, signs=None):
    """Append h with ``root`` identified to ``at``; other vertices shifted to offset.."""
    where = {}
    k = offset
    for x in range(h.n):
        if x == root:
            where[x] = at
        else:
            where[x] = k
            k += 1
    for (a, b), s in zip(h.edges, signs if signs is not None else h.signs):
        triples.append((where[a], where[b], s))
    return where, k


def _weak_fixing(h: SignedGraph, root: int) -> VertexPermutation | None:
    for p in automorphisms(h):
        if p(root) == root and is_weak_automorphism(h, p):
            return p
    return None


def attach(g: SignedGraph, witness: VertexPermutation, plan: Sequence) -> Certified:
    if not is_weak_automorphism(g, witness):
        raise SignedGraphError(f"{witness} is not a weak automorphism of the base graph")
    triples = [(a, b, s) for (a, b), s in zip(g.edges, g.signs)]
    image = list(witness.image)
    n = g.n
    for step in plan:
        if isinstance(step, PairAttachment):
            u, u2, h, r = step.u, step.u_prime, step.graph, step.root
            if u == u2 or not (0 <= u < n and 0 <= u2 < n) or image[u] != u2 or image[u2] != u:
                raise SignedGraphError(f"({u} {u2}) is not a transposition of the witness")
            if not 0 <= r < h.n:
                raise SignedGraphError(f"root {r} not in attached graph")
            left, n = _glue(triples, h, r, u, n)
            right, n = _glue(triples, h, r, u2, n, signs=[-s for s in h.signs])
            image.extend([0] * (n - len(image)))
            for x in range(h.n):
                if x != r:
                    image[left[x]] = right[x]
                    image[right[x]] = left[x]
        elif isinstance(step, FixedAttachment):
            v, h, r = step.v, step.graph, step.root
            if not 0 <= v < n or image[v] != v:
                raise SignedGraphError(f"vertex {v} is not fixed by the witness")
            if not 0 <= r < h.n:
                raise SignedGraphError(f"root {r} not in attached graph")
            if is_bipartite(h):
                psi = VertexPermutation.identity(h.n)
            else:
                psi = step.witness
                if psi is None:
                    psi = _weak_fixing(h, r)
                    if psi is None:
                        raise SignedGraphError(
                            "attached graph is neither bipartite nor odd-exchangeable with its root fixed")
                elif not is_weak_automorphism(h, psi):
                    raise SignedGraphError("supplied witness is not a weak automorphism of the attached graph")
                if psi(r) != r:
                    raise SignedGraphError(f"root {r} is not fixed by the attached graph's witness")
            where, n = _glue(triples, h, r, v, n)
            image.extend([0] * (n - len(image)))
            for x in range(h.n):
                if x != r:
                    image[where[x]] = where[psi(x)]
        else:
            raise SignedGraphError(f"unknown plan entry {step!r}")
    return Certified(SignedGraph.from_edges(n, triples), VertexPermutation(tuple(image)), "attach",
                     {"steps": len(plan)})


def extend(g: SignedGraph, witness: VertexPermutation, vi: int, vj: int, sign_choice: int = 1,
           tree: SpanningTree | None = None) -> Certified:
    """Add the edges vi-vj and witness(vi)-witness(vj).

    The second sign is chosen so the fundamental cycle of the new pair's
    image has the opposite sign (odd cycles) or the same sign (even cycles)
    as the first.  With a positive tree this is the rule "product of the two
    new signs is -1 for odd, +1 for even".
    """
    if sign_choice not in (1, -1):
        raise SignedGraphError("sign_choice must be +1 or -1")
    if not is_weak_automorphism(g, witness):
        raise SignedGraphError(f"{witness} is not a weak automorphism of the base graph")
    if tree is None:
        tree = spanning_tree(g)
    if {witness.map_edge(e) for e in tree.tree_edges} != set(tree.tree_edges):
        raise SignedGraphError("the witness does not map the spanning tree onto itself")
    wi, wj = witness(vi), witness(vj)
    if vi == vj or g.has_edge(vi, vj):
        raise SignedGraphError(f"{vi} and {vj} must be distinct non-adjacent vertices")
    if {vi, vj} == {wi, wj}:
        raise SignedGraphError(f"the pair {{{vi}, {vj}}} is fixed by the witness")
    if {witness(wi), witness(wj)} != {vi, vj}:
        raise SignedGraphError(f"the witness does not map {{{wi}, {wj}}} back to {{{vi}, {vj}}}")
    if g.has_edge(wi, wj):
        raise SignedGraphError(f"image pair {wi}, {wj} is already adjacent")
    # first place both edges positive, then fix the second sign from the cycle signs
    trial = SignedGraph.from_edges(g.n, [(a, b, s) for (a, b), s in zip(g.edges, g.signs)]
                                   + [(vi, vj, sign_choice), (wi, wj, 1)])
    t_new = tree_from_edges(trial, tree.tree_edges)
    cyc = {c.cotree_edge: c for c in fundamental_cycles(trial, t_new)}
    b1 = cyc[(min(vi, vj), max(vi, vj))]
    b2 = cyc[(min(wi, wj), max(wi, wj))]
    if b1.parity != b2.parity:
        raise SignedGraphError("the two new fundamental cycles differ in parity")
    wanted = -b1.sign if b1.parity else b1.sign
    second = 1 if b2.sign == wanted else -1
    out = SignedGraph.from_edges(g.n, [(a, b, s) for (a, b), s in zip(g.edges, g.signs)]
                                 + [(vi, vj, sign_choice), (wi, wj, second)])
    return Certified(out, witness, "extend",
                     {"vi": vi, "vj": vj, "sign_choice": sign_choice, "tree": sorted(map(list, tree.tree_edges))})


def construction_one(trees: Sequence[tuple[SignedGraph, int] | None] = (None, None, None),
                     cycle_length: int = 3) -> Certified:
    """Two odd cycles joined by a bridge, rooted trees hung on both in rotated order.

    Cycle one is v_0..v_{L-1} (vertices 0..L-1) with the edge v_1 v_2 negative,
    cycle two is v'_0..v'_{L-1} (vertices L..2L-1), the bridge is v_0 v'_0.
    Tree j gets one copy with its root joined to v_j and another joined to
    v'_{j-1 mod L}, so both cycles carry isomorphic decorations.
    """
    L = cycle_length
    if L < 3 or L % 2 == 0:
        raise SignedGraphError("cycle length must be odd and >= 3")
    if len(trees) > L:
        raise SignedGraphError(f"{len(trees)} trees for cycles of length {L}")
    triples = [(i, (i + 1) % L, -1 if i == 1 else 1) for i in range(L)]
    triples += [(L + i, L + (i + 1) % L, 1) for i in range(L)]
    triples.append((0, L, 1))
    n = 2 * L
    for j, item in enumerate(trees):
        if item is None:
            continue
        tree, root = item
        if not (is_connected(tree) and tree.m == tree.n - 1):
            raise SignedGraphError(f"tree {j} is not a tree")
        if not 0 <= root < tree.n:
            raise SignedGraphError(f"root {root} not in tree {j}")
        for anchor in (j, L + (j - 1) % L):
            base = n
            triples += [(a + base, b + base, s) for (a, b), s in zip(tree.edges, tree.signs)]
            triples.append((anchor, base + root, 1))
            n += tree.n
    return Certified(SignedGraph.from_edges(n, triples), None, "construction-one",
                     {"cycle_length": L,
                      "trees": [None if t is None else {"n": t[0].n, "edges": [list(e) for e in t[0].edges],
                                                        "root": t[1]} for t in trees]})
