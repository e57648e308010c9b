"""Exact integer polynomials attached to a signed graph.

``char_poly`` and ``matching_poly`` return :class:`IntPolynomial` values with
Python (arbitrary precision) integer coefficients.  ``sachs_coefficients``
recomputes the characteristic coefficients from basic figures and is kept
deliberately separate from the determinant code so it can serve as an
oracle for it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Sequence

import numpy as np

from .cycles import spanning_tree, two_regular_masks
from .errors import CapExceededError, SignedGraphError
from .graph import SignedGraph, components, induced_subgraph

SACHS_MAX_N = 10


class IntPolynomial:
    """Univariate polynomial with exact integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def reflect(self) -> "IntPolynomial":
        """p(-x)."""
        return IntPolynomial(a if i % 2 == 0 else -a for i, a in enumerate(self.coeffs))

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "IntPolynomial":
        return cls(int(a) for a in data)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for p in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[p]
            if a == 0:
                continue
            mag = abs(a)
            if p == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if p == 1 else f"x^{p}")
            terms.append(("- " if a < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# characteristic polynomial ---------------------------------------------------

def _faddeev_leverrier(g: SignedGraph) -> list[int]:
    """det(xI - A) of a (small, dense-ish) signed graph, lowest degree first.

    Uses M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k; every division
    is exact over the integers and is checked.
    """
    n = g.n
    nb = [[(w, g.sign(v, w)) for w in g.neighbors[v]] for v in range(n)]
    c = [0] * (n + 1)
    c[n] = 1
    m = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M <- A M + c_{n-k+1} I
        new = [[0] * n for _ in range(n)]
        for i in range(n):
            row = new[i]
            for w, s in nb[i]:
                src = m[w]
                if s > 0:
                    for j in range(n):
                        row[j] += src[j]
                else:
                    for j in range(n):
                        row[j] -= src[j]
            row[i] += c[n - k + 1]
        m = new
        trace = 0
        for i in range(n):
            for w, s in nb[i]:
                trace += s * m[w][i]
        q, r = divmod(-trace, k)
        if r:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier recurrence")
        c[n - k] = q
    return c


def char_poly(g: SignedGraph) -> IntPolynomial:
    """det(xI - A(g)), computed as the product over connected components."""
    result = IntPolynomial([1])
    for comp in components(g):
        h = g if len(comp) == g.n else induced_subgraph(g, comp)
        result = result * IntPolynomial(_faddeev_leverrier(h))
    return result


def char_coefficients(g: SignedGraph) -> list[int]:
    """[a_0, ..., a_n] with det(xI - A) = sum a_i x^(n-i)."""
    p = char_poly(g)
    return [p[g.n - i] for i in range(g.n + 1)]


def is_spectrally_symmetric(g: SignedGraph) -> bool:
    a = char_coefficients(g)
    return all(a[i] == 0 for i in range(1, g.n + 1, 2))


_BATCH_LIMIT = 1 << 52


def char_poly_batch(g: SignedGraph, negative_masks: Sequence[int]) -> np.ndarray:
    """Characteristic coefficients of many signings of one graph at once.

    Row ``r`` holds det(xI - A) (lowest degree first) for the signing whose
    negative edges are ``negative_masks[r]``.  Same recurrence as
    :func:`char_poly` in int64; raises OverflowError instead of wrapping.
    """
    n, b = g.n, len(negative_masks)
    a = np.zeros((b, n, n), dtype=np.int64)
    for i, (u, v) in enumerate(g.edges):
        col = np.array([-1 if mask >> i & 1 else 1 for mask in negative_masks], dtype=np.int64)
        a[:, u, v] = col
        a[:, v, u] = col
    c = np.zeros((b, n + 1), dtype=np.int64)
    c[:, n] = 1
    m = np.zeros((b, n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for k in range(1, n + 1):
        m = a @ m + c[:, n - k + 1, None, None] * eye
        if np.abs(m).max(initial=0) > _BATCH_LIMIT // max(n, 1):
            raise OverflowError("batched characteristic polynomial left the exact int64 range")
        trace = np.einsum("bij,bji->b", a, m)
        q, r = np.divmod(-trace, k)
        if np.any(r):
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier recurrence")
        c[:, n - k] = q
    return c


# matching polynomial -------------------------------------------------------------

def _neighbor_masks(g: SignedGraph) -> tuple[int, ...]:
    out = []
    for v in range(g.n):
        mask = 0
        for w in g.neighbors[v]:
            mask |= 1 << w
        out.append(mask)
    return tuple(out)


class _MatchingTable:
    """M(G[S], x) for vertex subsets S, memoised; lowest degree first."""

    def __init__(self, nbmasks: tuple[int, ...]):
        self.nb = nbmasks
        self.memo: dict[int, tuple[int, ...]] = {0: (1,)}

    def __call__(self, s: int) -> tuple[int, ...]:
        hit = self.memo.get(s)
        if hit is not None:
            return hit
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        size = s.bit_count()
        out = [0] * (size + 1)
        # x * M(S - v)
        for i, a in enumerate(self(rest)):
            out[i + 1] += a
        # - M(S - v - w) for every neighbour w of v inside S
        cand = self.nb[v] & rest
        while cand:
            bit = cand & -cand
            for i, a in enumerate(self(rest ^ bit)):
                out[i] -= a
            cand ^= bit
        res = tuple(out)
        self.memo[s] = res
        return res


@lru_cache(maxsize=1024)
def _matching_table(n: int, edges) -> _MatchingTable:
    return _MatchingTable(_neighbor_masks(SignedGraph(n, edges, (1,) * len(edges))))


def matching_table(g: SignedGraph) -> _MatchingTable:
    return _matching_table(g.n, g.edges)


def matching_poly(g: SignedGraph) -> IntPolynomial:
    """sum_i (-1)^i m_i(G) x^(n-2i); independent of the signature."""
    return IntPolynomial(matching_table(g)((1 << g.n) - 1))


def matching_poly_without(g: SignedGraph, vertex_mask: int) -> IntPolynomial:
    """M(G - V, x) where V is given as a vertex bitmask."""
    return IntPolynomial(matching_table(g)(((1 << g.n) - 1) & ~vertex_mask))


# Sachs oracle ------------------------------------------------------------------------

def simple_cycles(g: SignedGraph) -> list[tuple[tuple[int, ...], int]]:
    """Every cycle of ``g`` exactly once, as (vertices, sign).

    Found by depth-first search from each start vertex s through vertices
    larger than s; orientation is fixed by requiring the second vertex to be
    smaller than the last.
    """
    found = []
    nb = g.neighbors
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(v: int, sign: int):
            for w in nb[v]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    found.append((tuple(path), sign * g.sign(v, s)))
                elif w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend(w, sign * g.sign(v, w))
                    path.pop()
                    on_path.discard(w)

        extend(s, 1)
    return found


def sachs_coefficients(g: SignedGraph) -> list[int]:
    """[a_0..a_n] from a_i = sum over basic figures B on i vertices of
    (-1)^{components} 2^{cycles} sigma(B)."""
    n = g.n
    if n > SACHS_MAX_N:
        raise CapExceededError(f"Sachs enumeration is capped at n <= {SACHS_MAX_N}, got {n}")
    by_min: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for verts, sign in simple_cycles(g):
        vmask = 0
        for v in verts:
            vmask |= 1 << v
        by_min[min(verts)].append((vmask, sign))
    a = [0] * (n + 1)

    def walk(v: int, covered: int, comps: int, ncycles: int, sign: int):
        while v < n and covered >> v & 1:
            v += 1
        if v == n:
            a[covered.bit_count()] += (-1) ** comps * (1 << ncycles) * sign
            return
        walk(v + 1, covered, comps, ncycles, sign)
        for w in g.neighbors[v]:
            if w > v and not covered >> w & 1:
                walk(v + 1, covered | 1 << v | 1 << w, comps + 1, ncycles, sign)
        for vmask, csign in by_min[v]:
            if not vmask & covered:
                walk(v + 1, covered | vmask, comps + 1, ncycles + 1, sign * csign)

    walk(0, 0, 0, 0, 1)
    return a


def sachs_coefficient(g: SignedGraph, i: int) -> int:
    if not 0 <= i <= g.n:
        raise SignedGraphError(f"coefficient index {i} outside 0..{g.n}")
    return sachs_coefficients(g)[i]


# 2-regular decomposition -------------------------------------------------------------

def _cycle_term(g: SignedGraph, table, mask: int, vmask: int, p: int) -> IntPolynomial:
    sign = -1 if (mask & g.negative_mask).bit_count() & 1 else 1
    rest = table(((1 << g.n) - 1) & ~vmask)
    return IntPolynomial(rest) * (sign * (-2) ** p)


def _components_count(g: SignedGraph, mask: int, vmask: int) -> int:
    # a 2-regular edge set on V vertices with E = V edges: components = V - rank
    parent = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    comps = vmask.bit_count()
    rest = mask
    while rest:
        bit = rest & -rest
        a, b = g.edges[bit.bit_length() - 1]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
        rest ^= bit
    return comps


def odd_part(g: SignedGraph) -> IntPolynomial:
    """sum over odd 2-regular subgraphs C of sigma(C) (-2)^p(C) M(G - V(C), x)."""
    table = matching_table(g)
    total = IntPolynomial()
    for _, mask, vmask in two_regular_masks(g, spanning_tree(g)):
        if vmask.bit_count() % 2:
            total = total + _cycle_term(g, table, mask, vmask, _components_count(g, mask, vmask))
    return total


def decomposition_poly(g: SignedGraph) -> IntPolynomial:
    """M(G, x) + sum over all 2-regular subgraphs C of sigma(C) (-2)^p(C) M(G - V(C), x)."""
    table = matching_table(g)
    total = IntPolynomial(table((1 << g.n) - 1))
    for _, mask, vmask in two_regular_masks(g, spanning_tree(g)):
        total = total + _cycle_term(g, table, mask, vmask, _components_count(g, mask, vmask))
    return total


def odd_terms(p: IntPolynomial, n: int) -> IntPolynomial:
    """The terms a_i x^(n-i) of a degree-n polynomial with i odd."""
    return IntPolynomial(a if (n - k) % 2 else 0 for k, a in enumerate(p.coeffs))


def decomposition_batch(g: SignedGraph, negative_masks: Sequence[int]) -> np.ndarray:
    """:func:`decomposition_poly` for many signings of one connected graph, as int64 rows.

    The signature only enters through sigma(C), so the 2-regular catalogue
    and the matching table are built once.
    """
    n = g.n
    table = matching_table(g)
    members = two_regular_masks(g, spanning_tree(g))
    weights = np.zeros((len(members), n + 1), dtype=np.int64)
    cover = np.zeros((len(members), g.m), dtype=np.int64)
    for r, (_, mask, vmask) in enumerate(members):
        rest = table(((1 << n) - 1) & ~vmask)
        p = _components_count(g, mask, vmask)
        weights[r, :len(rest)] = [(-2) ** p * x for x in rest]
        cover[r] = [mask >> i & 1 for i in range(g.m)]
    negs = np.array([[mask >> i & 1 for i in range(g.m)] for mask in negative_masks],
                    dtype=np.int64).reshape(len(negative_masks), g.m)
    signs = 1 - 2 * ((negs @ cover.T) % 2)
    base = np.zeros(n + 1, dtype=np.int64)
    full = table((1 << n) - 1)
    base[:len(full)] = full
    return base + signs @ weights
