"""Signed graphs, switching, negation and relabeling.

A signed graph is stored edge-centrically: a sorted tuple of vertex pairs
``(u, v)`` with ``u < v`` and a parallel tuple of signs in ``{+1, -1}``.
Vertices are the integers ``0..n-1``.  Everything here is immutable; each
operation returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import SignedGraphError

Edge = tuple[int, int]
SwitchSet = frozenset


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SignedGraph:
    n: int
    edges: tuple[Edge, ...] = ()
    signs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise SignedGraphError(f"negative vertex count {self.n}")
        if len(self.edges) != len(self.signs):
            raise SignedGraphError("edges and signs differ in length")
        prev = None
        for (u, v), s in zip(self.edges, self.signs):
            if u == v:
                raise SignedGraphError(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise SignedGraphError(f"edge ({u}, {v}) not of the form 0 <= u < v < n={self.n}")
            if s not in (1, -1):
                raise SignedGraphError(f"sign {s!r} on edge ({u}, {v}) is not +1/-1")
            if prev is not None and (u, v) <= prev:
                if (u, v) == prev:
                    raise SignedGraphError(f"duplicate edge ({u}, {v})")
                raise SignedGraphError("edges are not in sorted order; use SignedGraph.from_edges")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SignedGraph":
        """Build from ``(u, v)`` or ``(u, v, sign)`` triples in any order.

        Missing signs default to +1.
        """
        table: dict[Edge, int] = {}
        for item in edges:
            if len(item) == 2:
                u, v = item
                s = 1
            else:
                u, v, s = item
            u, v, s = int(u), int(v), int(s)
            if u == v:
                raise SignedGraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise SignedGraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            e = _norm_edge(u, v)
            if e in table:
                raise SignedGraphError(f"duplicate edge {e}")
            table[e] = s
        keys = sorted(table)
        return cls(n, tuple(keys), tuple(table[e] for e in keys))

    @classmethod
    def from_matrix(cls, a) -> "SignedGraph":
        a = np.asarray(a)
        n = a.shape[0]
        if a.shape != (n, n):
            raise SignedGraphError("adjacency matrix must be square")
        if not np.array_equal(a, a.T):
            raise SignedGraphError("adjacency matrix must be symmetric")
        if np.any(np.diag(a) != 0):
            raise SignedGraphError("adjacency matrix has a nonzero diagonal")
        if not np.all(np.isin(a, (-1, 0, 1))):
            raise SignedGraphError("adjacency entries must lie in {0, 1, -1}")
        return cls.from_edges(n, [(i, j, int(a[i, j])) for i in range(n)
                                  for j in range(i + 1, n) if a[i, j] != 0])

    # derived views -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return tuple(tuple(sorted(x)) for x in nb)

    @cached_property
    def negative_mask(self) -> int:
        """Bit i set iff edge i is negative."""
        mask = 0
        for i, s in enumerate(self.signs):
            if s < 0:
                mask |= 1 << i
        return mask

    @property
    def underlying_key(self) -> tuple[int, tuple[Edge, ...]]:
        return (self.n, self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edge_index

    def sign(self, u: int, v: int) -> int:
        try:
            return self.signs[self.edge_index[_norm_edge(u, v)]]
        except KeyError:
            raise SignedGraphError(f"({u}, {v}) is not an edge") from None

    def adjacency_matrix(self, dtype=int) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for (u, v), s in zip(self.edges, self.signs):
            a[u, v] = a[v, u] = s
        return a

    def underlying(self) -> "SignedGraph":
        """Same graph with the all-positive signature."""
        return SignedGraph(self.n, self.edges, (1,) * self.m)

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        return SignedGraph(self.n, self.edges, tuple(int(s) for s in signs))

    def with_negative_mask(self, mask: int) -> "SignedGraph":
        return SignedGraph(self.n, self.edges,
                           tuple(-1 if mask >> i & 1 else 1 for i in range(self.m)))

    def __str__(self):
        body = ", ".join(f"{u}{'+' if s > 0 else '-'}{v}" for (u, v), s in zip(self.edges, self.signs))
        return f"SignedGraph(n={self.n}: {body})"


@dataclass(frozen=True)
class VertexPermutation:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise SignedGraphError(f"{list(self.image)} is not a permutation of 0..{len(self.image) - 1}")

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "VertexPermutation":
        """``from_cycles(5, [(1, 4), (2, 3)])`` is the permutation (1 4)(2 3)."""
        image = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                image[a] = b
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def inverse(self) -> "VertexPermutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return VertexPermutation(tuple(inv))

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """``self.compose(other)(v) == self(other(v))``."""
        return VertexPermutation(tuple(self.image[j] for j in other.image))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = []
            v = start
            while not seen[v]:
                seen[v] = True
                cyc.append(v)
                v = self.image[v]
            out.append(tuple(cyc))
        return out

    def map_edge(self, e: Edge) -> Edge:
        return _norm_edge(self.image[e[0]], self.image[e[1]])

    def __str__(self):
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


# operations ----------------------------------------------------------------

def switch(g: SignedGraph, u: Iterable[int]) -> SignedGraph:
    """Flip the sign of every edge in the cut between ``u`` and its complement."""
    members = set(u)
    for v in members:
        if not (0 <= v < g.n):
            raise SignedGraphError(f"switching vertex {v} out of range for n={g.n}")
    signs = tuple(-s if ((a in members) != (b in members)) else s
                  for (a, b), s in zip(g.edges, g.signs))
    return SignedGraph(g.n, g.edges, signs)


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, g.edges, tuple(-s for s in g.signs))


def apply_permutation(g: SignedGraph, p: VertexPermutation) -> SignedGraph:
    if not isinstance(p, VertexPermutation):
        p = VertexPermutation(tuple(p))
    if p.n != g.n:
        raise SignedGraphError(f"permutation on {p.n} points applied to graph on {g.n} vertices")
    return SignedGraph.from_edges(g.n, [(p(a), p(b), s) for (a, b), s in zip(g.edges, g.signs)])


def parse(text: str) -> SignedGraph:
    """Read the ``n m`` / ``u v s`` edge-list format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SignedGraphError("empty graph text")
    head = lines[0].split()
    if len(head) != 2:
        raise SignedGraphError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise SignedGraphError(f"header must be 'n m', got {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise SignedGraphError("negative n or m in header")
    body = lines[1:]
    if len(body) != m:
        raise SignedGraphError(f"header announces {m} edges, found {len(body)} edge lines")
    triples = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise SignedGraphError(f"malformed edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise SignedGraphError(f"malformed edge line {ln!r}") from None
        if parts[2] not in ("+", "-"):
            raise SignedGraphError(f"sign token {parts[2]!r} not in {{+,-}}")
        triples.append((u, v, 1 if parts[2] == "+" else -1))
    return SignedGraph.from_edges(n, triples)


def serialize(g: SignedGraph) -> str:
    out = [f"{g.n} {g.m}"]
    for (u, v), s in zip(g.edges, g.signs):
        out.append(f"{u} {v} {'+' if s > 0 else '-'}")
    return "\n".join(out) + "\n"


# structure helpers ---------------------------------------------------------

def components(g: SignedGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SignedGraph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_bipartite(g: SignedGraph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def induced_subgraph(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Subgraph on ``vertices``, relabeled ``0..k-1`` in ascending order."""
    keep = sorted(set(vertices))
    relabel = {v: i for i, v in enumerate(keep)}
    return SignedGraph.from_edges(len(keep), [(relabel[a], relabel[b], s)
                                              for (a, b), s in zip(g.edges, g.signs)
                                              if a in relabel and b in relabel])


def remove_vertices(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    drop = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in drop))


def disjoint_union(*graphs: SignedGraph) -> SignedGraph:
    triples = []
    offset = 0
    for h in graphs:
        triples.extend((a + offset, b + offset, s) for (a, b), s in zip(h.edges, h.signs))
        offset += h.n
    return SignedGraph.from_edges(offset, triples)


# small families --------------------------------------------------------------

def empty_graph(n: int) -> SignedGraph:
    return SignedGraph(n)


def path_graph(n: int, negative: Iterable[int] = ()) -> SignedGraph:
    """P_n on vertices 0..n-1; ``negative`` lists indices i of edges (i, i+1) to make negative."""
    neg = set(negative)
    return SignedGraph.from_edges(n, [(i, i + 1, -1 if i in neg else 1) for i in range(n - 1)])


def cycle_graph(n: int, negative: Iterable[int] = ()) -> SignedGraph:
    """C_n; edge i joins i and (i+1) mod n."""
    if n < 3:
        raise SignedGraphError("a cycle needs at least 3 vertices")
    neg = set(negative)
    return SignedGraph.from_edges(n, [(i, (i + 1) % n, -1 if i in neg else 1) for i in range(n)])


def complete_graph(n: int) -> SignedGraph:
    return SignedGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> SignedGraph:
    return SignedGraph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
