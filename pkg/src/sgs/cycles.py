"""Spanning trees, fundamental cycles and the 2-regular subgraphs of a graph.

Edge subsets are handled as Python int bitmasks over the edge order of the
:class:`SignedGraph` (bit ``i`` <-> ``g.edges[i]``).  A vector of the GF(2)
cycle space is the XOR of fundamental-cycle masks; a 2-regular subgraph is
a cycle-space vector in which no vertex has degree 4 or more.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceededError, NotConnectedError, SignedGraphError
from .graph import Edge, SignedGraph

MAX_CYCLOMATIC = 20


@dataclass(frozen=True)
class SpanningTree:
    n: int
    parent: tuple[int, ...]          # parent[root] == -1
    depth: tuple[int, ...]
    tree_edges: frozenset[Edge]
    cotree_edges: tuple[Edge, ...]   # lexicographic order
    tree_mask: int

    @property
    def k(self) -> int:
        return len(self.cotree_edges)

    def path(self, a: int, b: int) -> list[int]:
        """Vertices of the tree path from ``a`` to ``b``."""
        left, right = [a], [b]
        while a != b:
            if self.depth[a] >= self.depth[b]:
                a = self.parent[a]
                left.append(a)
            else:
                b = self.parent[b]
                right.append(b)
        # both lists end at the meeting vertex
        return left + right[-2::-1]


@dataclass(frozen=True)
class FundamentalCycle:
    cotree_edge: Edge
    vertices: tuple[int, ...]        # in cycle order, starting at cotree_edge[0]
    edge_set: frozenset[Edge]
    mask: int
    sign: int

    @property
    def length(self) -> int:
        return len(self.edge_set)

    @property
    def parity(self) -> int:
        return self.length % 2


@dataclass(frozen=True)
class TwoRegularSubgraph:
    coordinates: int                 # bit i <-> i-th fundamental cycle
    mask: int
    edge_set: frozenset[Edge]
    vertices: frozenset[int]
    component_cycles: tuple[tuple[int, ...], ...]
    sign: int

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def p(self) -> int:
        return len(self.component_cycles)

    @property
    def parity(self) -> int:
        return self.vertex_count % 2

    def coordinate_vector(self, k: int) -> tuple[int, ...]:
        return tuple(self.coordinates >> i & 1 for i in range(k))


@dataclass(frozen=True)
class TwoRegularCatalog:
    all: tuple[TwoRegularSubgraph, ...]

    def _part(self, parity: int, sign: int):
        return tuple(c for c in self.all if c.parity == parity and c.sign == sign)

    @property
    def c0_pos(self):
        return self._part(0, 1)

    @property
    def c0_neg(self):
        return self._part(0, -1)

    @property
    def c1_pos(self):
        return self._part(1, 1)

    @property
    def c1_neg(self):
        return self._part(1, -1)

    @property
    def odd(self):
        return tuple(c for c in self.all if c.parity == 1)

    @property
    def even(self):
        return tuple(c for c in self.all if c.parity == 0)

    def __len__(self):
        return len(self.all)


def _tree_from_parent(g: SignedGraph, parent: list[int], depth: list[int]) -> SpanningTree:
    tree = frozenset((min(v, p), max(v, p)) for v, p in enumerate(parent) if p >= 0)
    cotree = tuple(e for e in g.edges if e not in tree)
    mask = 0
    for e in tree:
        mask |= 1 << g.edge_index[e]
    return SpanningTree(g.n, tuple(parent), tuple(depth), tree, cotree, mask)


def spanning_tree(g: SignedGraph) -> SpanningTree:
    """Breadth-first tree rooted at 0, neighbours visited in ascending order."""
    if g.n == 0:
        raise NotConnectedError("the empty graph has no spanning tree")
    parent = [-2] * g.n
    depth = [0] * g.n
    parent[0] = -1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors[v]:
            if parent[w] == -2:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
    if -2 in parent:
        raise NotConnectedError("graph is disconnected; a spanning tree needs a connected graph")
    return _tree_from_parent(g, parent, depth)


def tree_from_edges(g: SignedGraph, edges) -> SpanningTree:
    """Wrap a caller-chosen spanning tree (given as edge pairs) of ``g``."""
    tree = {(min(a, b), max(a, b)) for a, b in edges}
    for e in tree:
        if e not in g.edge_index:
            raise SignedGraphError(f"tree edge {e} is not an edge of the graph")
    if len(tree) != g.n - 1:
        raise SignedGraphError(f"a spanning tree on {g.n} vertices has {g.n - 1} edges, got {len(tree)}")
    nb: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in tree:
        nb[a].append(b)
        nb[b].append(a)
    parent = [-2] * g.n
    depth = [0] * g.n
    parent[0] = -1
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in sorted(nb[v]):
            if parent[w] == -2:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
    if -2 in parent:
        raise SignedGraphError("given edges do not span the graph")
    return _tree_from_parent(g, parent, depth)


def _mask_of(g: SignedGraph, edges) -> int:
    mask = 0
    for e in edges:
        mask |= 1 << g.edge_index[e]
    return mask


def _sign_of_mask(g: SignedGraph, mask: int) -> int:
    return -1 if (mask & g.negative_mask).bit_count() & 1 else 1


def fundamental_cycles(g: SignedGraph, t: SpanningTree | None = None) -> list[FundamentalCycle]:
    if t is None:
        t = spanning_tree(g)
    out = []
    for a, b in t.cotree_edges:
        verts = t.path(b, a)          # b ... a, then the cotree edge closes a-b
        verts = [a] + verts[:-1]
        edges = {(min(x, y), max(x, y)) for x, y in zip(verts, verts[1:] + [verts[0]])}
        mask = _mask_of(g, edges)
        out.append(FundamentalCycle((a, b), tuple(verts), frozenset(edges), mask, _sign_of_mask(g, mask)))
    return out


@lru_cache(maxsize=4096)
def _two_regular_masks(n: int, edges: tuple[Edge, ...], fund_masks: tuple[int, ...]):
    """All (coordinates, edge mask, vertex mask) of 2-regular cycle-space vectors."""
    k = len(fund_masks)
    ends = [(1 << a) | (1 << b) for a, b in edges]
    combo = [0] * (1 << k)
    found = []
    for c in range(1, 1 << k):
        low = c & -c
        mask = combo[c ^ low] ^ fund_masks[low.bit_length() - 1]
        combo[c] = mask
        vmask = 0
        rest = mask
        while rest:
            bit = rest & -rest
            vmask |= ends[bit.bit_length() - 1]
            rest ^= bit
        # even subgraph: all degrees even, so 2-regular iff |V| == |E|
        if vmask.bit_count() == mask.bit_count():
            found.append((c, mask, vmask))
    return tuple(found)


def _decompose(g: SignedGraph, mask: int) -> tuple[tuple[int, ...], ...]:
    nb: dict[int, list[int]] = {}
    rest = mask
    while rest:
        bit = rest & -rest
        a, b = g.edges[bit.bit_length() - 1]
        nb.setdefault(a, []).append(b)
        nb.setdefault(b, []).append(a)
        rest ^= bit
    seen: set[int] = set()
    cycles = []
    for start in sorted(nb):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(nb[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            x, y = nb[cur]
            prev, cur = cur, (y if x == prev else x)
        cycles.append(tuple(cyc))
    return tuple(cycles)


def two_regular_masks(g: SignedGraph, t: SpanningTree | None = None):
    """Signature-free (coordinates, edge mask, vertex mask) triples, cached per graph."""
    if t is None:
        t = spanning_tree(g)
    if t.k > MAX_CYCLOMATIC:
        raise CapExceededError(f"cycle space of dimension {t.k} exceeds the cap {MAX_CYCLOMATIC}")
    fund = tuple(c.mask for c in fundamental_cycles(g, t))
    return _two_regular_masks(g.n, g.edges, fund)


def enumerate_two_regular(g: SignedGraph, t: SpanningTree | None = None) -> TwoRegularCatalog:
    members = []
    for coords, mask, vmask in two_regular_masks(g, t):
        edges = frozenset(g.edges[i] for i in range(g.m) if mask >> i & 1)
        verts = frozenset(v for v in range(g.n) if vmask >> v & 1)
        members.append(TwoRegularSubgraph(coords, mask, edges, verts, _decompose(g, mask),
                                          _sign_of_mask(g, mask)))
    return TwoRegularCatalog(tuple(members))


def cycle_sign_vector(g: SignedGraph, t: SpanningTree | None = None) -> tuple[int, ...]:
    """Bit i is 1 iff the i-th fundamental cycle is negative."""
    return tuple(1 if c.sign < 0 else 0 for c in fundamental_cycles(g, t))
